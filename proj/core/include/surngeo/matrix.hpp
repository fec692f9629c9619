#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "surngeo/assignment.hpp"
#include "surngeo/linkage.hpp"

namespace surngeo {

// Sparse surname-by-country publication counts n(s, c) with per-country
// totals T(c) and the grand total. Zero cells are absent; totals stay
// consistent under every mutation. Map ordering doubles as the canonical
// (lexicographic) ordering of surnames and of the country universe.
class SurnameCountryMatrix {
 public:
  using Row = std::map<std::string, std::uint64_t>;

  // Adds `count` publications of evidence for (surname, country).
  void add(const std::string& surname, const std::string& country, std::uint64_t count = 1);

  // Cellwise sum; associative and commutative, usable as a parallel
  // reduction. The two inputs must come from disjoint publication sets.
  void merge(const SurnameCountryMatrix& other);

  const std::map<std::string, Row>& counts() const { return counts_; }
  const Row& country_totals() const { return totals_; }
  std::uint64_t grand_total() const { return grand_total_; }
  bool empty() const { return counts_.empty(); }

  std::uint64_t surname_count() const { return counts_.size(); }
  std::uint64_t country_count() const { return totals_.size(); }

  // All countries with T(c) > 0, sorted lexicographically.
  std::vector<std::string> universe() const;

  bool operator==(const SurnameCountryMatrix& o) const { return counts_ == o.counts_; }

 private:
  std::map<std::string, Row> counts_;
  Row totals_;
  std::uint64_t grand_total_ = 0;
};

// Tallies one publication per linkage; the linkage stage guarantees at most
// one event per (surname, country, publication).
SurnameCountryMatrix accumulate(const std::vector<TrustedLinkage>& linkages);

SurnameCountryMatrix merge(const SurnameCountryMatrix& a, const SurnameCountryMatrix& b);

// Matrix file: TSV surname, country, count (positive integer); no header,
// rows sorted ascending by (surname, country). save/load round-trips exactly.
void save_matrix(std::ostream& out, const SurnameCountryMatrix& m);
void save_matrix(const std::filesystem::path& path, const SurnameCountryMatrix& m);
SurnameCountryMatrix load_matrix(std::istream& in);
SurnameCountryMatrix load_matrix(const std::filesystem::path& path);

// Countries ranked by how many surnames the method assigned to them
// (reliable assignments only), descending, ties broken lexicographically.
// Throws ConfigError when k < 1.
std::vector<std::pair<std::string, std::uint64_t>> top_countries(const SurnameCountryMatrix& m,
                                                                 const AssignmentSet& assignments,
                                                                 int k);

}  // namespace surngeo
