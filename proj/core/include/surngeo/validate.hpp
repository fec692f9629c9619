#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "surngeo/assignment.hpp"

namespace surngeo {

// One control-list row: a surname known to belong to a language group.
struct ControlEntry {
  std::string surname;   // canonical, same normalization as the corpus
  std::string language;  // uppercased label
  bool operator==(const ControlEntry&) const = default;
};

struct ControlList {
  std::vector<ControlEntry> entries;
  std::uint64_t warnings = 0;  // duplicate surnames under several languages, dropped rows
};

// language -> normalized country, and normalized country -> the set of
// countries whose assignment counts as correct for that group.
struct LanguageCountryMap {
  std::map<std::string, std::string> language_to_country;
  std::map<std::string, std::set<std::string>> members;
};

// One report row. Percentages are derived from the integer tallies.
struct ValidationRow {
  std::string normalized_country;
  std::uint64_t matched = 0;  // control surnames present in the assignment universe
  std::uint64_t covered = 0;  // matched surnames whose assignment is reliable
  std::uint64_t correct = 0;  // covered surnames assigned inside the member set
  double coverage() const { return matched ? static_cast<double>(covered) / static_cast<double>(matched) : 0.0; }
  double correctness() const { return covered ? static_cast<double>(correct) / static_cast<double>(covered) : 0.0; }
};

struct ValidationReport {
  std::vector<ValidationRow> rows;  // sorted by normalized country
  ValidationRow totals;             // integer tallies aggregated over all rows
  std::uint64_t control_entries = 0;
  std::uint64_t unmatched = 0;  // control surnames absent from the assignment universe
};

// Control file: TSV surname, language; no header. Surnames go through
// normalize_surname; rows that normalize to nothing are dropped and counted.
// A surname appearing under several languages keeps every entry (warned).
ControlList load_control(const std::filesystem::path& path);

// Language map file, two row kinds:
//   lang \t <language> \t <normalized country>
//   members \t <normalized country> \t <name;name;...>
// Throws FormatError for malformed rows, ConfigError for a language mapped
// twice or a normalized country without members.
LanguageCountryMap load_langmap(const std::filesystem::path& path);
LanguageCountryMap load_langmap(std::istream& in);

// Scores the assignments against the control list. Every normalized country
// of the map gets a row (zeros when nothing matched); totals aggregate the
// integer tallies. Throws ConfigError when a control entry references a
// language missing from the map.
ValidationReport evaluate(const AssignmentSet& assignments, const std::vector<ControlEntry>& control,
                          const LanguageCountryMap& map);

// Report file: TSV normalized_country, surnames, coverage_pct, correct_pct
// (two fractional digits) with a final Total row; no header.
void render_report(std::ostream& out, const ValidationReport& report);
void render_report(const std::filesystem::path& path, const ValidationReport& report);

}  // namespace surngeo
