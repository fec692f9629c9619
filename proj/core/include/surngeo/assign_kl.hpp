#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "surngeo/assignment.hpp"
#include "surngeo/matrix.hpp"

namespace surngeo {

// Two readings of the divergence score:
//  PointMass       D = -ln(modal share); 0 iff the surname is single-country.
//                  Low divergence = concentrated = reliable.
//  GlobalReference D = KL(surname distribution || corpus country distribution).
//                  High information gain over the corpus baseline = reliable.
enum class KlMode : std::uint8_t { PointMass, GlobalReference };

struct KlConfig {
  double percentile = 0.8;  // in (0, 1]
  KlMode mode = KlMode::PointMass;
};

// Country with the largest count for one surname (ties -> lexicographically
// smallest) and its share of the surname's total.
std::pair<std::string, double> modal_country(const SurnameCountryMatrix::Row& counts);

// D = -ln(n(s, c*) / N_s). Exactly 0 for single-country surnames.
double kl_point_mass(const SurnameCountryMatrix::Row& counts);

// D = sum_c p_s(c) * ln(p_s(c) / q(c)) with q(c) = T(c) / T, over countries
// where the surname occurs. Non-negative; exactly 0 when p_s equals q.
double kl_global(const SurnameCountryMatrix::Row& counts, const SurnameCountryMatrix::Row& totals,
                 std::uint64_t grand_total);

// Nearest-rank percentile: the ceil(p * M)-th smallest of M scores, with p
// resolved at 1e-9 granularity so decimal inputs rank as written.
// Throws ConfigError for an empty list or p outside (0, 1].
double percentile_threshold(std::vector<double> scores, double p);

// Method 1: every surname gets its modal country; the reliable flag marks
// scores passing the percentile cut for the configured mode.
// Throws ConfigError for an empty matrix or invalid config.
AssignmentSet assign_kl(const SurnameCountryMatrix& m, const KlConfig& cfg = {});

}  // namespace surngeo
