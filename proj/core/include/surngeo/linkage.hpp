#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "surngeo/record.hpp"

namespace surngeo {

// Evidence rules, strongest first. The tag on a deduplicated linkage is the
// strongest rule that produced the pair; it is diagnostic only and never
// affects counts.
enum class LinkRule : std::uint8_t {
  Reprint = 0,        // reprint-address author
  Registered = 1,     // author-address link registered in the record
  FirstAuthor = 2,    // first author paired with first address
  SingleCountry = 3,  // all addresses in one country
};

std::string_view rule_name(LinkRule rule);
LinkRule parse_rule(std::string_view name);  // throws FormatError

// One deduplicated (surname, country) evidence event from one publication.
struct TrustedLinkage {
  std::string surname;
  std::string country;
  std::string pub_id;
  LinkRule rule = LinkRule::SingleCountry;
  bool operator==(const TrustedLinkage&) const = default;
};

// Applies the four rules to one valid record. The result holds at most one
// linkage per (surname, country), ordered by (surname, country).
std::vector<TrustedLinkage> extract_linkages(const PublicationRecord& rec);

// Parses records from a JSONL stream and feeds every extracted linkage to
// `sink` in input order. Lenient mode skips bad lines and counts them.
struct ExtractStats {
  ReadStats read;
  std::uint64_t linkages = 0;
};
ExtractStats stream_extract(std::istream& records, const CountryNormalizer& norm, ParseMode mode,
                            const std::function<void(const TrustedLinkage&)>& sink);

// Linkage dump format: TSV surname, country, pub_id, rule; no header.
void write_linkage_row(std::ostream& out, const TrustedLinkage& linkage);

// Streams rows from a linkage TSV; throws FormatError on malformed rows.
void for_each_linkage_row(std::istream& in, const std::function<void(const TrustedLinkage&)>& fn);
std::vector<TrustedLinkage> read_linkages(std::istream& in);

}  // namespace surngeo
