#include "surngeo/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "surngeo/errors.hpp"
#include "surngeo/tsv.hpp"

namespace surngeo {
namespace {

std::uint64_t parse_count(std::string_view text, std::uint64_t lineno) {
  if (text.empty() || text.size() > 19)
    throw FormatError("bad count '" + std::string(text) + "'", lineno);
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw FormatError("bad count '" + std::string(text) + "'", lineno);
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (value == 0) throw FormatError("count must be positive", lineno);
  return value;
}

}  // namespace

void SurnameCountryMatrix::add(const std::string& surname, const std::string& country,
                               std::uint64_t count) {
  if (count == 0) return;
  counts_[surname][country] += count;
  totals_[country] += count;
  grand_total_ += count;
}

void SurnameCountryMatrix::merge(const SurnameCountryMatrix& other) {
  for (const auto& [surname, row] : other.counts_)
    for (const auto& [country, count] : row) add(surname, country, count);
}

std::vector<std::string> SurnameCountryMatrix::universe() const {
  std::vector<std::string> out;
  out.reserve(totals_.size());
  for (const auto& [country, total] : totals_) out.push_back(country);
  return out;
}

SurnameCountryMatrix accumulate(const std::vector<TrustedLinkage>& linkages) {
  SurnameCountryMatrix m;
  for (const TrustedLinkage& l : linkages) m.add(l.surname, l.country);
  return m;
}

SurnameCountryMatrix merge(const SurnameCountryMatrix& a, const SurnameCountryMatrix& b) {
  SurnameCountryMatrix out = a;
  out.merge(b);
  return out;
}

void save_matrix(std::ostream& out, const SurnameCountryMatrix& m) {
  for (const auto& [surname, row] : m.counts())
    for (const auto& [country, count] : row)
      out << surname << '\t' << country << '\t' << count << '\n';
}

void save_matrix(const std::filesystem::path& path, const SurnameCountryMatrix& m) {
  atomic_write(path, [&m](std::ostream& out) { save_matrix(out, m); });
}

SurnameCountryMatrix load_matrix(std::istream& in) {
  SurnameCountryMatrix m;
  for_each_line(in, [&](std::string_view line, std::uint64_t lineno) {
    if (line.empty()) return;
    auto fields = split_tsv(line);
    if (fields.size() != 3)
      throw FormatError("matrix row needs 3 columns, got " + std::to_string(fields.size()), lineno);
    if (fields[0].empty() || fields[1].empty())
      throw FormatError("matrix row with empty surname or country", lineno);
    std::string surname(fields[0]);
    std::string country(fields[1]);
    std::uint64_t count = parse_count(fields[2], lineno);
    auto row = m.counts().find(surname);
    if (row != m.counts().end() && row->second.count(country))
      throw FormatError("duplicate matrix row for ('" + surname + "', '" + country + "')", lineno);
    m.add(surname, country, count);
  });
  return m;
}

SurnameCountryMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open matrix '" + path.string() + "'");
  return load_matrix(in);
}

std::vector<std::pair<std::string, std::uint64_t>> top_countries(const SurnameCountryMatrix& m,
                                                                 const AssignmentSet& assignments,
                                                                 int k) {
  if (k < 1) throw ConfigError("top-k must be at least 1");
  (void)m;  // the ranking depends only on assignments; the matrix pins the universe
  std::map<std::string, std::uint64_t> tally;
  for (const Assignment& a : assignments.entries)
    if (a.reliable) ++tally[a.country];
  std::vector<std::pair<std::string, std::uint64_t>> ranked(tally.begin(), tally.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(static_cast<std::size_t>(k));
  return ranked;
}

}  // namespace surngeo
