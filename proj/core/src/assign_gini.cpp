#include "surngeo/assign_gini.hpp"

#include <algorithm>
#include <cmath>

#include "surngeo/errors.hpp"

namespace surngeo {
namespace {

// Shared core: `sorted_nonzero` ascending, `universe_size` counts the zeros
// too. Uses the rank form of the pairwise-difference formula:
//   G = sum_k (2k - n - 1) x_(k) / (n * sum x),  k = 1..n over the full
// vector; zero entries occupy the lowest ranks and contribute nothing.
double gini_sorted(const std::vector<double>& sorted_nonzero, std::size_t universe_size) {
  std::size_t n = universe_size;
  std::size_t m = sorted_nonzero.size();
  if (n == 0 || m == 0) throw DomainError("gini of an all-zero or empty vector");
  if (m == 1) return static_cast<double>(n - 1) / static_cast<double>(n);
  if (m == n && sorted_nonzero.front() == sorted_nonzero.back()) return 0.0;

  std::size_t zeros = n - m;
  double sum = 0.0;
  double weighted = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double rank_coeff = 2.0 * static_cast<double>(zeros + j + 1) - static_cast<double>(n) - 1.0;
    weighted += rank_coeff * sorted_nonzero[j];
    sum += sorted_nonzero[j];
  }
  double g = weighted / (static_cast<double>(n) * sum);
  double upper = static_cast<double>(n - 1) / static_cast<double>(n);
  return std::clamp(g, 0.0, upper);
}

}  // namespace

std::optional<std::vector<double>> relativized_shares(const SurnameCountryMatrix::Row& counts,
                                                      const SurnameCountryMatrix::Row& totals,
                                                      const std::vector<std::string>& universe,
                                                      std::uint64_t min_count) {
  std::uint64_t floor = std::max<std::uint64_t>(1, min_count);
  std::vector<double> shares(universe.size(), 0.0);
  bool any = false;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    auto it = counts.find(universe[i]);
    if (it == counts.end() || it->second < floor) continue;
    auto total = totals.find(universe[i]);
    if (total == totals.end() || total->second == 0)
      throw ConfigError("country '" + universe[i] + "' has no total in the universe");
    shares[i] = static_cast<double>(it->second) / static_cast<double>(total->second);
    any = true;
  }
  if (!any) return std::nullopt;
  return shares;
}

double gini(std::span<const double> values) {
  if (values.empty()) throw DomainError("gini of an empty vector");
  std::vector<double> nonzero;
  nonzero.reserve(values.size());
  for (double v : values) {
    if (v < 0.0) throw DomainError("gini of a vector with negative entries");
    if (v > 0.0) nonzero.push_back(v);
  }
  if (nonzero.empty()) throw DomainError("gini of an all-zero vector");
  std::sort(nonzero.begin(), nonzero.end());
  return gini_sorted(nonzero, values.size());
}

double gini_sparse(std::vector<double> nonzero, std::size_t universe_size) {
  if (nonzero.size() > universe_size) throw DomainError("more nonzero values than the universe holds");
  for (double v : nonzero)
    if (!(v > 0.0)) throw DomainError("gini_sparse values must be positive");
  if (nonzero.empty()) throw DomainError("gini of an all-zero vector");
  std::sort(nonzero.begin(), nonzero.end());
  return gini_sorted(nonzero, universe_size);
}

AssignmentSet assign_gini(const SurnameCountryMatrix& m, const GiniConfig& cfg) {
  if (m.empty()) throw ConfigError("assign on an empty matrix");
  const std::vector<std::string> universe = m.universe();
  const auto& totals = m.country_totals();
  std::uint64_t floor = std::max<std::uint64_t>(1, cfg.min_count);

  AssignmentSet set;
  set.method = Method::Gini;
  set.config_summary = "method=GINI min_count=" + std::to_string(cfg.min_count);
  set.entries.reserve(m.surname_count());

  std::vector<double> shares;
  for (const auto& [surname, row] : m.counts()) {
    shares.clear();
    const std::string* best_country = nullptr;
    double best_share = 0.0;
    for (const auto& [country, count] : row) {
      if (count < floor) continue;
      double share = static_cast<double>(count) / static_cast<double>(totals.at(country));
      shares.push_back(share);
      if (!best_country || share > best_share) {  // map order keeps ties lexicographic
        best_country = &country;
        best_share = share;
      }
    }
    if (!best_country) {
      ++set.skipped;
      continue;
    }
    double score = gini_sparse(shares, universe.size());
    set.entries.push_back({surname, *best_country, score, true, Method::Gini});
  }
  return set;
}

}  // namespace surngeo
