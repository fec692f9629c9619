#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surngeo/normalize.hpp"

namespace surngeo {

struct AuthorEntry {
  std::uint32_t seq = 0;     // 1-based byline position
  std::string surname;       // canonical (see normalize_surname)
  std::string initials;      // empty when absent
  bool operator==(const AuthorEntry&) const = default;
};

struct AddressEntry {
  std::uint32_t seq = 0;  // 1-based address position
  std::string country;    // canonical country name
  bool operator==(const AddressEntry&) const = default;
};

struct ReprintInfo {
  std::uint32_t author_seq = 0;
  std::uint32_t address_seq = 0;
  bool operator==(const ReprintInfo&) const = default;
};

// One parsed bibliographic record. After parse_record succeeds:
// authors/addresses are sorted by seq with seqs exactly 1..N, links are
// sorted and deduplicated, every link and the reprint reference existing
// seqs, and year is within [1900, 2100].
struct PublicationRecord {
  std::string id;
  int year = 0;
  std::vector<AuthorEntry> authors;
  std::vector<AddressEntry> addresses;
  std::optional<ReprintInfo> reprint;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> links;  // (author_seq, address_seq)
  bool operator==(const PublicationRecord&) const = default;
};

// Parses one JSON-lines record. Surnames and countries come out normalized.
// Throws FormatError for malformed syntax or missing/mistyped fields and
// SemanticError for invariant violations (duplicate or non-contiguous seqs,
// dangling references, out-of-range year, fields that normalize to nothing).
// Never crashes on arbitrary input.
PublicationRecord parse_record(std::string_view line, const CountryNormalizer& norm,
                               std::uint64_t lineno = 0);

// Canonical JSON line for a record; parse_record(serialize_record(r)) == r.
std::string serialize_record(const PublicationRecord& rec);

enum class ParseMode { Lenient, Strict };

struct ReadStats {
  std::uint64_t lines = 0;
  std::uint64_t parsed = 0;
  std::uint64_t format_errors = 0;
  std::uint64_t semantic_errors = 0;
  ReadStats& operator+=(const ReadStats& o) {
    lines += o.lines;
    parsed += o.parsed;
    format_errors += o.format_errors;
    semantic_errors += o.semantic_errors;
    return *this;
  }
};

// Reads JSONL records from a stream. Lenient mode skips and counts bad
// lines (empty lines are ignored silently); strict mode rethrows the first
// parse error.
class JsonlReader {
 public:
  JsonlReader(std::istream& in, const CountryNormalizer& norm, ParseMode mode);

  // Fetches the next valid record; false at end of input.
  bool next(PublicationRecord& out);

  const ReadStats& stats() const { return stats_; }

 private:
  std::istream& in_;
  const CountryNormalizer& norm_;
  ParseMode mode_;
  ReadStats stats_;
};

}  // namespace surngeo
