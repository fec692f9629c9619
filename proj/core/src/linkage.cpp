#include "surngeo/linkage.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

#include "surngeo/errors.hpp"
#include "surngeo/tsv.hpp"

namespace surngeo {

std::string_view rule_name(LinkRule rule) {
  switch (rule) {
    case LinkRule::Reprint:
      return "REPRINT";
    case LinkRule::Registered:
      return "REGISTERED";
    case LinkRule::FirstAuthor:
      return "FIRST_AUTHOR";
    case LinkRule::SingleCountry:
      return "SINGLE_COUNTRY";
  }
  return "UNKNOWN";
}

LinkRule parse_rule(std::string_view name) {
  if (name == "REPRINT") return LinkRule::Reprint;
  if (name == "REGISTERED") return LinkRule::Registered;
  if (name == "FIRST_AUTHOR") return LinkRule::FirstAuthor;
  if (name == "SINGLE_COUNTRY") return LinkRule::SingleCountry;
  throw FormatError("unknown linkage rule '" + std::string(name) + "'");
}

std::vector<TrustedLinkage> extract_linkages(const PublicationRecord& rec) {
  // Pair -> strongest rule seen. Keys are (surname, country); map order gives
  // the documented output ordering.
  std::map<std::pair<std::string_view, std::string_view>, LinkRule> pairs;
  auto add = [&pairs](std::string_view surname, std::string_view country, LinkRule rule) {
    auto [it, inserted] = pairs.emplace(std::make_pair(surname, country), rule);
    if (!inserted && rule < it->second) it->second = rule;
  };

  // Seqs are contiguous from 1 (record invariant), so seq k is index k-1.
  if (rec.reprint) {
    add(rec.authors[rec.reprint->author_seq - 1].surname,
        rec.addresses[rec.reprint->address_seq - 1].country, LinkRule::Reprint);
  }
  for (const auto& [author_seq, address_seq] : rec.links)
    add(rec.authors[author_seq - 1].surname, rec.addresses[address_seq - 1].country,
        LinkRule::Registered);
  if (!rec.authors.empty() && !rec.addresses.empty())
    add(rec.authors.front().surname, rec.addresses.front().country, LinkRule::FirstAuthor);
  if (!rec.addresses.empty()) {
    const std::string& first_country = rec.addresses.front().country;
    bool single = std::all_of(rec.addresses.begin(), rec.addresses.end(),
                              [&](const AddressEntry& a) { return a.country == first_country; });
    if (single) {
      for (const AuthorEntry& author : rec.authors)
        add(author.surname, first_country, LinkRule::SingleCountry);
    }
  }

  std::vector<TrustedLinkage> out;
  out.reserve(pairs.size());
  for (const auto& [key, rule] : pairs)
    out.push_back({std::string(key.first), std::string(key.second), rec.id, rule});
  return out;
}

ExtractStats stream_extract(std::istream& records, const CountryNormalizer& norm, ParseMode mode,
                            const std::function<void(const TrustedLinkage&)>& sink) {
  ExtractStats stats;
  JsonlReader reader(records, norm, mode);
  PublicationRecord rec;
  while (reader.next(rec)) {
    for (const TrustedLinkage& linkage : extract_linkages(rec)) {
      sink(linkage);
      ++stats.linkages;
    }
  }
  stats.read = reader.stats();
  return stats;
}

void write_linkage_row(std::ostream& out, const TrustedLinkage& linkage) {
  out << linkage.surname << '\t' << linkage.country << '\t' << linkage.pub_id << '\t'
      << rule_name(linkage.rule) << '\n';
}

void for_each_linkage_row(std::istream& in, const std::function<void(const TrustedLinkage&)>& fn) {
  for_each_line(in, [&](std::string_view line, std::uint64_t lineno) {
    if (line.empty()) return;
    auto fields = split_tsv(line);
    if (fields.size() != 4)
      throw FormatError("linkage row needs 4 columns, got " + std::to_string(fields.size()), lineno);
    if (fields[0].empty() || fields[1].empty() || fields[2].empty())
      throw FormatError("linkage row with empty column", lineno);
    TrustedLinkage linkage{std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
                           LinkRule::SingleCountry};
    try {
      linkage.rule = parse_rule(fields[3]);
    } catch (const FormatError& e) {
      throw FormatError(e.what(), lineno);
    }
    fn(linkage);
  });
}

std::vector<TrustedLinkage> read_linkages(std::istream& in) {
  std::vector<TrustedLinkage> out;
  for_each_linkage_row(in, [&](const TrustedLinkage& l) { out.push_back(l); });
  return out;
}

}  // namespace surngeo
