#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace surngeo {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem-level failure: missing file, unwritable path, short write.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input syntax (bad JSON, wrong column count, bad number).
// Carries the 1-based line number when the source is line-oriented.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what, std::uint64_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_ = 0;
};

// Syntactically valid input that violates a record invariant
// (duplicate seq, dangling link, out-of-range year). Carries the record id.
class SemanticError : public Error {
 public:
  explicit SemanticError(const std::string& what, std::string record_id = {})
      : Error(record_id.empty() ? what : "record '" + record_id + "': " + what),
        record_id_(std::move(record_id)) {}

  const std::string& record_id() const { return record_id_; }

 private:
  std::string record_id_;
};

// Invalid configuration: bad flag combination, out-of-range parameter,
// inconsistent alias or language map.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's mathematical domain (all-zero or negative
// vectors passed to concentration measures).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace surngeo
