#include "surngeo/unicode.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace surngeo::uni {
namespace {

#include "unicode_tables.inc"

constexpr char32_t kReplacement = 0xFFFD;
constexpr char32_t kTableLimit = 0x3000;

const UpperMapping* find_upper(char32_t cp) {
  auto it = std::lower_bound(std::begin(kUpperMap), std::end(kUpperMap), cp,
                             [](const UpperMapping& m, char32_t c) { return m.cp < c; });
  return (it != std::end(kUpperMap) && it->cp == cp) ? it : nullptr;
}

const Decomposition* find_decomposition(char32_t cp) {
  auto it = std::lower_bound(std::begin(kDecompositions), std::end(kDecompositions), cp,
                             [](const Decomposition& d, char32_t c) { return d.cp < c; });
  return (it != std::end(kDecompositions) && it->cp == cp) ? it : nullptr;
}

char32_t find_composition(char32_t first, char32_t second) {
  auto key = std::pair<char32_t, char32_t>{first, second};
  auto it = std::lower_bound(std::begin(kCompositionPairs), std::end(kCompositionPairs), key,
                             [](const CompositionPair& p, const std::pair<char32_t, char32_t>& k) {
                               return p.first != k.first ? p.first < k.first : p.second < k.second;
                             });
  if (it != std::end(kCompositionPairs) && it->first == first && it->second == second)
    return it->composed;
  return 0;
}

unsigned combining_class(char32_t cp) {
  auto it = std::lower_bound(std::begin(kCombiningClasses), std::end(kCombiningClasses), cp,
                             [](const CombiningClassEntry& e, char32_t c) { return e.cp < c; });
  return (it != std::end(kCombiningClasses) && it->cp == cp) ? it->ccc : 0;
}

void decompose_into(char32_t cp, std::u32string& out) {
  if (cp < kTableLimit) {
    if (const Decomposition* d = find_decomposition(cp)) {
      out.append(d->to, d->to + d->len);
      return;
    }
  }
  out.push_back(cp);
}

// Stable-sorts maximal runs of nonzero-ccc codepoints by combining class.
void canonical_order(std::u32string& s) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (combining_class(s[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && combining_class(s[j]) != 0) ++j;
    std::stable_sort(s.begin() + i, s.begin() + j,
                     [](char32_t a, char32_t b) { return combining_class(a) < combining_class(b); });
    i = j;
  }
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  while (i < text.size()) {
    unsigned char b0 = bytes[i];
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(len) > text.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      unsigned char bk = bytes[i + static_cast<std::size_t>(k)];
      if ((bk & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong forms, surrogates, and out-of-range values.
    if (ok) {
      if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
          (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
        ok = false;
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

std::string encode_utf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::u32string to_nfc(std::u32string_view codepoints) {
  std::u32string nfd;
  nfd.reserve(codepoints.size());
  for (char32_t cp : codepoints) decompose_into(cp, nfd);
  canonical_order(nfd);

  // Canonical composition pass: try to combine each mark (or directly
  // following starter) with the last starter, unless a mark of equal or
  // higher combining class blocks it.
  std::u32string out;
  out.reserve(nfd.size());
  std::ptrdiff_t last_starter = -1;
  unsigned prev_ccc = 0;
  for (char32_t cp : nfd) {
    unsigned ccc = combining_class(cp);
    if (last_starter >= 0) {
      bool adjacent = static_cast<std::size_t>(last_starter) + 1 == out.size();
      bool blocked = !adjacent && prev_ccc >= ccc;
      if (!blocked) {
        if (char32_t composed = find_composition(out[static_cast<std::size_t>(last_starter)], cp)) {
          out[static_cast<std::size_t>(last_starter)] = composed;
          continue;
        }
      }
    }
    if (ccc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size());
    out.push_back(cp);
    prev_ccc = ccc;
  }
  return out;
}

std::u32string to_upper(std::u32string_view codepoints) {
  std::u32string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) {
    if (cp < kTableLimit) {
      if (const UpperMapping* m = find_upper(cp)) {
        for (char32_t t : m->to) {
          if (t) out.push_back(t);
        }
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case 0x0085:  // NEL
    case 0x00A0:  // no-break space, common in scraped bibliographic data
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::string nfc_upper(std::string_view text) {
  return encode_utf8(to_upper(to_nfc(decode_utf8(text))));
}

}  // namespace surngeo::uni
