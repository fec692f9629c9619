#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace surngeo {

enum class Method : std::uint8_t { Kl, Gini };

std::string_view method_name(Method method);
Method parse_method(std::string_view name);  // throws FormatError

// One surname's resolved country plus the method's concentration score.
struct Assignment {
  std::string surname;
  std::string country;
  double score = 0.0;  // divergence (KL, natural log) or Gini index
  bool reliable = false;
  Method method = Method::Kl;
  bool operator==(const Assignment&) const = default;
};

// All assignments from one method run, sorted by surname.
struct AssignmentSet {
  std::vector<Assignment> entries;
  Method method = Method::Kl;
  std::string config_summary;   // parameters used, for diagnostics
  std::uint64_t skipped = 0;    // surnames dropped by a min-count filter
  bool operator==(const AssignmentSet& o) const { return entries == o.entries && method == o.method; }
};

// Assignment file: TSV surname, country, score (6 fractional digits),
// reliable (0/1), method tag; no header, sorted by surname.
void write_assignments(std::ostream& out, const AssignmentSet& set);

// Throws FormatError on malformed rows, duplicate surnames, or mixed
// method tags.
AssignmentSet read_assignments(std::istream& in);

}  // namespace surngeo
