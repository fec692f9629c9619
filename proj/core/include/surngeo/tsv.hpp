#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace surngeo {

// Splits one line on tabs. Fields may be empty; no quoting or escapes.
std::vector<std::string_view> split_tsv(std::string_view line);

// Calls `fn(line, lineno)` for every line of `in`, stripping the trailing
// LF (and a CR before it, so CRLF input is tolerated). Line numbers are
// 1-based. A final line without a terminator is still delivered.
void for_each_line(std::istream& in, const std::function<void(std::string_view, std::uint64_t)>& fn);

// Fixed-point decimal with `digits` fractional digits, e.g. format_fixed(0.5, 2) == "0.50".
// Rounding is the correctly-rounded decimal of the binary value (ties to even).
std::string format_fixed(double value, int digits);

// Writes `writer`'s output to a temporary file next to `path` and renames it
// into place, so a failed run never leaves a partial output file.
// Throws IoError on any failure; the temporary is removed.
void atomic_write(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

// Opens `path` for reading, throwing IoError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace surngeo
