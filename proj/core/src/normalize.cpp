#include "surngeo/normalize.hpp"

#include <fstream>

#include "surngeo/errors.hpp"
#include "surngeo/tsv.hpp"
#include "surngeo/unicode.hpp"

namespace surngeo {
namespace {

// Trims leading/trailing whitespace; when `collapse` is set, internal runs
// become one ASCII space.
std::u32string tidy_whitespace(std::u32string_view s, bool collapse) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && uni::is_space(s[begin])) ++begin;
  while (end > begin && uni::is_space(s[end - 1])) --end;
  std::u32string out;
  out.reserve(end - begin);
  bool in_run = false;
  for (std::size_t i = begin; i < end; ++i) {
    if (collapse && uni::is_space(s[i])) {
      in_run = true;
      continue;
    }
    if (in_run) {
      out.push_back(U' ');
      in_run = false;
    }
    out.push_back(s[i]);
  }
  return out;
}

std::string canonical_text(std::string_view raw, bool collapse) {
  std::u32string cps = uni::to_upper(uni::to_nfc(uni::decode_utf8(raw)));
  return uni::encode_utf8(tidy_whitespace(cps, collapse));
}

}  // namespace

std::string normalize_surname(std::string_view raw) { return canonical_text(raw, /*collapse=*/true); }

std::string canonical_country_text(std::string_view raw) { return canonical_text(raw, /*collapse=*/false); }

CountryNormalizer::CountryNormalizer() {
  add_alias("USSR", "RUSSIA");
  add_alias("FED REP GER", "GERMANY");
  add_alias("PEOPLES R CHINA", "CHINA");
}

std::string CountryNormalizer::normalize(std::string_view raw) const {
  std::string key = canonical_country_text(raw);
  auto it = alias_map_.find(key);
  return it != alias_map_.end() ? it->second : key;
}

void CountryNormalizer::add_alias(std::string_view raw, std::string_view canonical) {
  std::string key = canonical_country_text(raw);
  std::string value = canonical_country_text(canonical);
  if (key.empty() || value.empty()) throw ConfigError("country alias with empty side");
  auto [it, inserted] = alias_map_.emplace(key, value);
  if (!inserted && it->second != value)
    throw ConfigError("conflicting aliases for '" + key + "': '" + it->second + "' vs '" + value + "'");
}

void CountryNormalizer::set_alias(std::string_view raw, std::string_view canonical) {
  std::string key = canonical_country_text(raw);
  std::string value = canonical_country_text(canonical);
  if (key.empty() || value.empty()) throw ConfigError("country alias with empty side");
  alias_map_[key] = value;
}

void CountryNormalizer::check_idempotent() const {
  for (const auto& [key, value] : alias_map_) {
    auto it = alias_map_.find(value);
    if (it != alias_map_.end() && it->second != value)
      throw ConfigError("alias chain: '" + key + "' -> '" + value + "' -> '" + it->second + "'");
  }
}

std::string normalize_country(std::string_view raw, const CountryNormalizer& norm) {
  return norm.normalize(raw);
}

CountryNormalizer load_country_map(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open country map '" + path.string() + "'");
  CountryNormalizer norm;
  std::map<std::string, std::string> from_file;
  for_each_line(in, [&](std::string_view line, std::uint64_t lineno) {
    if (line.empty()) return;
    auto fields = split_tsv(line);
    if (fields.size() != 2)
      throw FormatError("country map row needs 2 columns, got " + std::to_string(fields.size()), lineno);
    std::string raw = canonical_country_text(fields[0]);
    std::string canonical = canonical_country_text(fields[1]);
    if (raw.empty() || canonical.empty()) throw FormatError("country map row with empty column", lineno);
    auto [it, inserted] = from_file.emplace(raw, canonical);
    if (!inserted && it->second != canonical)
      throw ConfigError("conflicting aliases for '" + raw + "' at line " + std::to_string(lineno));
  });
  for (const auto& [raw, canonical] : from_file) norm.set_alias(raw, canonical);
  norm.check_idempotent();
  return norm;
}

}  // namespace surngeo
