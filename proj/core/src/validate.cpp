#include "surngeo/validate.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "surngeo/errors.hpp"
#include "surngeo/normalize.hpp"
#include "surngeo/tsv.hpp"

namespace surngeo {

ControlList load_control(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open control list '" + path.string() + "'");
  ControlList list;
  std::map<std::string, std::string> first_language;
  for_each_line(in, [&](std::string_view line, std::uint64_t lineno) {
    if (line.empty()) return;
    auto fields = split_tsv(line);
    if (fields.size() != 2)
      throw FormatError("control row needs 2 columns, got " + std::to_string(fields.size()), lineno);
    std::string surname = normalize_surname(fields[0]);
    std::string language = canonical_country_text(fields[1]);
    if (language.empty()) throw FormatError("control row with empty language", lineno);
    if (surname.empty()) {
      ++list.warnings;  // nothing left of the surname; skip the row
      return;
    }
    auto [it, inserted] = first_language.emplace(surname, language);
    if (!inserted && it->second != language) ++list.warnings;  // kept as a separate entry
    list.entries.push_back({std::move(surname), std::move(language)});
  });
  return list;
}

LanguageCountryMap load_langmap(std::istream& in) {
  LanguageCountryMap map;
  for_each_line(in, [&](std::string_view line, std::uint64_t lineno) {
    if (line.empty()) return;
    auto fields = split_tsv(line);
    if (fields.size() != 3)
      throw FormatError("language map row needs 3 columns, got " + std::to_string(fields.size()), lineno);
    if (fields[0] == "lang") {
      std::string language = canonical_country_text(fields[1]);
      std::string country = canonical_country_text(fields[2]);
      if (language.empty() || country.empty())
        throw FormatError("language row with empty column", lineno);
      auto [it, inserted] = map.language_to_country.emplace(language, country);
      if (!inserted && it->second != country)
        throw ConfigError("language '" + language + "' mapped to both '" + it->second + "' and '" +
                          country + "'");
    } else if (fields[0] == "members") {
      std::string country = canonical_country_text(fields[1]);
      if (country.empty()) throw FormatError("members row with empty country", lineno);
      auto& members = map.members[country];
      std::string_view rest = fields[2];
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t sep = rest.find(';', start);
        std::string_view piece =
            sep == std::string_view::npos ? rest.substr(start) : rest.substr(start, sep - start);
        std::string name = canonical_country_text(piece);
        if (!name.empty()) members.insert(std::move(name));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
      }
      if (members.empty()) throw FormatError("members row with no countries", lineno);
    } else {
      throw FormatError("unknown row kind '" + std::string(fields[0]) + "'", lineno);
    }
  });
  for (const auto& [language, country] : map.language_to_country) {
    auto it = map.members.find(country);
    if (it == map.members.end() || it->second.empty())
      throw ConfigError("normalized country '" + country + "' has no members row");
  }
  return map;
}

LanguageCountryMap load_langmap(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open language map '" + path.string() + "'");
  return load_langmap(in);
}

ValidationReport evaluate(const AssignmentSet& assignments, const std::vector<ControlEntry>& control,
                          const LanguageCountryMap& map) {
  std::unordered_map<std::string_view, const Assignment*> by_surname;
  by_surname.reserve(assignments.entries.size());
  for (const Assignment& a : assignments.entries) by_surname.emplace(a.surname, &a);

  // One row per normalized country referenced by the language side.
  std::map<std::string, ValidationRow> rows;
  for (const auto& [language, country] : map.language_to_country)
    rows.emplace(country, ValidationRow{country, 0, 0, 0});

  ValidationReport report;
  report.control_entries = control.size();
  for (const ControlEntry& entry : control) {
    auto lang = map.language_to_country.find(entry.language);
    if (lang == map.language_to_country.end())
      throw ConfigError("control list references unknown language '" + entry.language + "'");
    auto found = by_surname.find(entry.surname);
    if (found == by_surname.end()) {
      ++report.unmatched;
      continue;
    }
    ValidationRow& row = rows.at(lang->second);
    ++row.matched;
    if (!found->second->reliable) continue;
    ++row.covered;
    if (map.members.at(lang->second).count(found->second->country)) ++row.correct;
  }

  report.totals.normalized_country = "Total";
  for (auto& [country, row] : rows) {
    report.totals.matched += row.matched;
    report.totals.covered += row.covered;
    report.totals.correct += row.correct;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

void render_row(std::ostream& out, const ValidationRow& row) {
  out << row.normalized_country << '\t' << row.matched << '\t'
      << format_fixed(100.0 * row.coverage(), 2) << '\t' << format_fixed(100.0 * row.correctness(), 2)
      << '\n';
}

}  // namespace

void render_report(std::ostream& out, const ValidationReport& report) {
  for (const ValidationRow& row : report.rows) render_row(out, row);
  render_row(out, report.totals);
}

void render_report(const std::filesystem::path& path, const ValidationReport& report) {
  atomic_write(path, [&report](std::ostream& out) { render_report(out, report); });
}

}  // namespace surngeo
