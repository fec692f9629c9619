#pragma once

#include <string>
#include <string_view>

namespace surngeo::uni {

// Decodes UTF-8; every invalid byte becomes U+FFFD (one replacement per byte),
// so any byte string decodes without failing.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view codepoints);

// Canonical composition (NFC) for codepoints below U+3000; higher codepoints
// pass through untouched. Idempotent.
std::u32string to_nfc(std::u32string_view codepoints);

// Full uppercase mapping (one codepoint may expand, e.g. U+00DF -> "SS").
std::u32string to_upper(std::u32string_view codepoints);

bool is_space(char32_t cp);

// NFC then uppercase over a UTF-8 string; the common normalization core.
std::string nfc_upper(std::string_view text);

}  // namespace surngeo::uni
