#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surngeo/assignment.hpp"
#include "surngeo/matrix.hpp"

namespace surngeo {

struct GiniConfig {
  std::uint64_t min_count = 0;  // counts below this relativize to zero
};

// x(c) = n(s, c) / T(c) over the whole country universe, in universe order;
// countries where the surname is absent (or filtered by min_count) get 0.
// Returns nullopt when the filter empties the surname (caller skips it).
std::optional<std::vector<double>> relativized_shares(const SurnameCountryMatrix::Row& counts,
                                                      const SurnameCountryMatrix::Row& totals,
                                                      const std::vector<std::string>& universe,
                                                      std::uint64_t min_count = 0);

// Gini index of a non-negative vector: sum_ij |x_i - x_j| / (2 n^2 mean).
// Zeros count toward n. Range [0, (n-1)/n]; exactly 0 for equal vectors and
// exactly (n-1)/n for a single nonzero entry.
// Throws DomainError for an empty, all-zero, or negative vector.
double gini(std::span<const double> values);

// Same index given only the nonzero values and the universe size; bit-equal
// to gini() on the zero-padded vector. Consumes its argument (sorts in place).
double gini_sparse(std::vector<double> nonzero, std::size_t universe_size);

// Method 2: each surviving surname goes to the country with the largest
// relativized share (ties -> lexicographically smallest); the score is the
// Gini index of its share vector; every assignment is reliable (no cut, so
// coverage is 100% when min_count is 0).
// Throws ConfigError for an empty matrix.
AssignmentSet assign_gini(const SurnameCountryMatrix& m, const GiniConfig& cfg = {});

}  // namespace surngeo
