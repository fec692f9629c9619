#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace surngeo {

// Canonical surname form: NFC-composed, uppercase, trimmed, internal
// whitespace runs collapsed to a single space. Diacritics and hyphens are
// kept as-is. Returns "" when nothing survives; callers treat that as a
// rejected value. Idempotent.
std::string normalize_surname(std::string_view raw);

// Uppercase + trim only, no alias lookup. The textual half of country
// normalization; also used for language names and map keys.
std::string canonical_country_text(std::string_view raw);

// Maps raw country strings to canonical uppercase names via an alias table.
// Construction with no arguments installs the built-in aliases
// (USSR -> RUSSIA, FED REP GER -> GERMANY, PEOPLES R CHINA -> CHINA).
class CountryNormalizer {
 public:
  CountryNormalizer();

  // Canonical country name: alias_map[upper(trim(raw))] if present, else
  // upper(trim(raw)). Returns "" for values that trim to nothing. Idempotent.
  std::string normalize(std::string_view raw) const;

  // Adds one alias; both sides are canonicalized. Throws ConfigError when
  // `raw` is already mapped to a different canonical.
  void add_alias(std::string_view raw, std::string_view canonical);

  // Like add_alias but silently replaces an existing mapping.
  void set_alias(std::string_view raw, std::string_view canonical);

  // Throws ConfigError if any alias target is itself re-aliased elsewhere,
  // which would break the idempotence of normalize().
  void check_idempotent() const;

  const std::map<std::string, std::string>& aliases() const { return alias_map_; }

 private:
  std::map<std::string, std::string> alias_map_;
};

std::string normalize_country(std::string_view raw, const CountryNormalizer& norm);

// Builds a normalizer from a two-column TSV (raw TAB canonical, UTF-8, no
// header). Built-in defaults are installed first; file entries override them.
// Throws IoError for a missing file, FormatError for malformed rows, and
// ConfigError for conflicting duplicate keys or alias chains.
CountryNormalizer load_country_map(const std::filesystem::path& path);

}  // namespace surngeo
