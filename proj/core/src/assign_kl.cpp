#include "surngeo/assign_kl.hpp"

#include <algorithm>
#include <cmath>

#include "surngeo/errors.hpp"
#include "surngeo/tsv.hpp"

namespace surngeo {
namespace {

std::uint64_t row_total(const SurnameCountryMatrix::Row& counts) {
  std::uint64_t total = 0;
  for (const auto& [country, count] : counts) total += count;
  return total;
}

// ceil(p * m) on the decimal value of p, immune to binary representation
// drift (0.8 * 10 must rank 8th, not 9th). p is quantized to 9 decimals.
std::uint64_t nearest_rank(double p, std::uint64_t m) {
  constexpr std::uint64_t kScale = 1000000000;
  auto scaled = static_cast<std::uint64_t>(std::llround(p * static_cast<double>(kScale)));
  std::uint64_t rank = (scaled * m + kScale - 1) / kScale;
  return std::clamp<std::uint64_t>(rank, 1, m);
}

}  // namespace

std::pair<std::string, double> modal_country(const SurnameCountryMatrix::Row& counts) {
  const std::string* best = nullptr;
  std::uint64_t best_count = 0;
  std::uint64_t total = 0;
  for (const auto& [country, count] : counts) {
    total += count;
    if (count > best_count) {  // map order makes the first max the smallest name
      best = &country;
      best_count = count;
    }
  }
  if (!best) throw ConfigError("modal_country on an empty count vector");
  return {*best, static_cast<double>(best_count) / static_cast<double>(total)};
}

double kl_point_mass(const SurnameCountryMatrix::Row& counts) {
  double share = modal_country(counts).second;
  return share < 1.0 ? -std::log(share) : 0.0;
}

double kl_global(const SurnameCountryMatrix::Row& counts, const SurnameCountryMatrix::Row& totals,
                 std::uint64_t grand_total) {
  std::uint64_t surname_total = row_total(counts);
  if (surname_total == 0) throw ConfigError("kl_global on an empty count vector");
  double divergence = 0.0;
  for (const auto& [country, count] : counts) {
    auto it = totals.find(country);
    if (it == totals.end() || it->second == 0)
      throw ConfigError("country '" + country + "' missing from baseline totals");
    double p = static_cast<double>(count) / static_cast<double>(surname_total);
    double q = static_cast<double>(it->second) / static_cast<double>(grand_total);
    divergence += p * std::log(p / q);
  }
  // Gibbs' inequality guarantees >= 0; clear float dust so the bound holds.
  return divergence < 0.0 ? 0.0 : divergence;
}

double percentile_threshold(std::vector<double> scores, double p) {
  if (scores.empty()) throw ConfigError("percentile of an empty score list");
  if (!(p > 0.0) || p > 1.0) throw ConfigError("percentile must be in (0, 1]");
  std::sort(scores.begin(), scores.end());
  return scores[nearest_rank(p, scores.size()) - 1];
}

AssignmentSet assign_kl(const SurnameCountryMatrix& m, const KlConfig& cfg) {
  if (m.empty()) throw ConfigError("assign on an empty matrix");
  if (!(cfg.percentile > 0.0) || cfg.percentile > 1.0)
    throw ConfigError("percentile must be in (0, 1]");

  AssignmentSet set;
  set.method = Method::Kl;
  set.config_summary = "method=KL percentile=" + format_fixed(cfg.percentile, 6) +
                       " mode=" + (cfg.mode == KlMode::PointMass ? "point-mass" : "global");
  set.entries.reserve(m.surname_count());

  std::vector<double> scores;
  scores.reserve(m.surname_count());
  for (const auto& [surname, row] : m.counts()) {
    auto [country, share] = modal_country(row);
    double score = cfg.mode == KlMode::PointMass
                       ? (share < 1.0 ? -std::log(share) : 0.0)
                       : kl_global(row, m.country_totals(), m.grand_total());
    scores.push_back(score);
    set.entries.push_back({surname, std::move(country), score, false, Method::Kl});
  }

  if (cfg.mode == KlMode::PointMass) {
    double threshold = percentile_threshold(scores, cfg.percentile);
    for (Assignment& a : set.entries) a.reliable = a.score <= threshold;
  } else if (cfg.percentile == 1.0) {
    for (Assignment& a : set.entries) a.reliable = true;
  } else {
    double threshold = percentile_threshold(scores, 1.0 - cfg.percentile);
    for (Assignment& a : set.entries) a.reliable = a.score >= threshold;
  }
  return set;
}

}  // namespace surngeo
