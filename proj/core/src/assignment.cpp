#include "surngeo/assignment.hpp"

#include <cerrno>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>

#include "surngeo/errors.hpp"
#include "surngeo/tsv.hpp"

namespace surngeo {

std::string_view method_name(Method method) { return method == Method::Kl ? "KL" : "GINI"; }

Method parse_method(std::string_view name) {
  if (name == "KL") return Method::Kl;
  if (name == "GINI") return Method::Gini;
  throw FormatError("unknown method tag '" + std::string(name) + "'");
}

void write_assignments(std::ostream& out, const AssignmentSet& set) {
  for (const Assignment& a : set.entries) {
    out << a.surname << '\t' << a.country << '\t' << format_fixed(a.score, 6) << '\t'
        << (a.reliable ? '1' : '0') << '\t' << method_name(a.method) << '\n';
  }
}

AssignmentSet read_assignments(std::istream& in) {
  AssignmentSet set;
  std::set<std::string> seen;
  bool first = true;
  for_each_line(in, [&](std::string_view line, std::uint64_t lineno) {
    if (line.empty()) return;
    auto fields = split_tsv(line);
    if (fields.size() != 5)
      throw FormatError("assignment row needs 5 columns, got " + std::to_string(fields.size()), lineno);
    if (fields[0].empty() || fields[1].empty())
      throw FormatError("assignment row with empty surname or country", lineno);
    Assignment a;
    a.surname = std::string(fields[0]);
    a.country = std::string(fields[1]);
    std::string score_text(fields[2]);
    char* end = nullptr;
    errno = 0;
    a.score = std::strtod(score_text.c_str(), &end);
    if (errno != 0 || end == score_text.c_str() || *end != '\0' || a.score < 0.0)
      throw FormatError("bad score '" + score_text + "'", lineno);
    if (fields[3] == "1")
      a.reliable = true;
    else if (fields[3] == "0")
      a.reliable = false;
    else
      throw FormatError("bad reliable flag '" + std::string(fields[3]) + "'", lineno);
    try {
      a.method = parse_method(fields[4]);
    } catch (const FormatError& e) {
      throw FormatError(e.what(), lineno);
    }
    if (first) {
      set.method = a.method;
      first = false;
    } else if (a.method != set.method) {
      throw FormatError("mixed method tags in one assignment file", lineno);
    }
    if (!seen.insert(a.surname).second)
      throw FormatError("duplicate surname '" + a.surname + "'", lineno);
    set.entries.push_back(std::move(a));
  });
  std::sort(set.entries.begin(), set.entries.end(),
            [](const Assignment& x, const Assignment& y) { return x.surname < y.surname; });
  return set;
}

}  // namespace surngeo
