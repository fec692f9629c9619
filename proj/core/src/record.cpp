#include "surngeo/record.hpp"

#include <algorithm>
#include <istream>
#include <limits>

#include <nlohmann/json.hpp>

#include "surngeo/errors.hpp"

namespace surngeo {
namespace {

using nlohmann::json;

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

std::uint32_t get_seq(const json& obj, const char* key, std::uint64_t lineno, const std::string& rec_id) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw FormatError(std::string("missing or non-integer '") + key + "'", lineno);
  auto v = it->get<std::int64_t>();
  if (v < 1 || v > std::numeric_limits<std::uint32_t>::max())
    throw SemanticError(std::string("'") + key + "' out of range", rec_id);
  return static_cast<std::uint32_t>(v);
}

std::string get_string(const json& obj, const char* key, std::uint64_t lineno) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string())
    throw FormatError(std::string("missing or non-string '") + key + "'", lineno);
  return it->get<std::string>();
}

// Verifies seqs are exactly 1..N after sorting by seq.
template <typename Entry>
void require_contiguous(std::vector<Entry>& entries, const char* what, const std::string& rec_id) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.seq < b.seq; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].seq != i + 1) {
      throw SemanticError(entries[i].seq == i ? std::string("duplicate ") + what + " seq"
                                              : std::string(what) + " seqs not contiguous from 1",
                          rec_id);
    }
  }
}

std::string trim_ascii(std::string s) {
  auto issp = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  std::size_t b = 0, e = s.size();
  while (b < e && issp(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && issp(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

PublicationRecord parse_record(std::string_view line, const CountryNormalizer& norm, std::uint64_t lineno) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), lineno);
  }
  if (!j.is_object()) throw FormatError("record is not a JSON object", lineno);

  PublicationRecord rec;
  rec.id = get_string(j, "id", lineno);
  if (rec.id.empty()) throw SemanticError("empty record id");

  auto year_it = j.find("year");
  if (year_it == j.end() || !year_it->is_number_integer())
    throw FormatError("missing or non-integer 'year'", lineno);
  auto year = year_it->get<std::int64_t>();
  if (year < kMinYear || year > kMaxYear)
    throw SemanticError("year " + std::to_string(year) + " outside [1900, 2100]", rec.id);
  rec.year = static_cast<int>(year);

  auto authors_it = j.find("authors");
  if (authors_it == j.end() || !authors_it->is_array())
    throw FormatError("missing or non-array 'authors'", lineno);
  for (const json& a : *authors_it) {
    if (!a.is_object()) throw FormatError("author entry is not an object", lineno);
    AuthorEntry entry;
    entry.seq = get_seq(a, "seq", lineno, rec.id);
    entry.surname = normalize_surname(get_string(a, "surname", lineno));
    if (entry.surname.empty()) throw SemanticError("author surname normalizes to nothing", rec.id);
    if (auto init = a.find("initials"); init != a.end()) {
      if (!init->is_string()) throw FormatError("non-string 'initials'", lineno);
      entry.initials = trim_ascii(init->get<std::string>());
    }
    rec.authors.push_back(std::move(entry));
  }
  require_contiguous(rec.authors, "author", rec.id);

  auto addresses_it = j.find("addresses");
  if (addresses_it == j.end() || !addresses_it->is_array())
    throw FormatError("missing or non-array 'addresses'", lineno);
  for (const json& a : *addresses_it) {
    if (!a.is_object()) throw FormatError("address entry is not an object", lineno);
    AddressEntry entry;
    entry.seq = get_seq(a, "seq", lineno, rec.id);
    entry.country = norm.normalize(get_string(a, "country", lineno));
    if (entry.country.empty()) throw SemanticError("address country normalizes to nothing", rec.id);
    rec.addresses.push_back(std::move(entry));
  }
  require_contiguous(rec.addresses, "address", rec.id);

  auto n_authors = static_cast<std::uint32_t>(rec.authors.size());
  auto n_addresses = static_cast<std::uint32_t>(rec.addresses.size());

  if (auto rp = j.find("reprint"); rp != j.end() && !rp->is_null()) {
    if (!rp->is_object()) throw FormatError("'reprint' is not an object", lineno);
    ReprintInfo info;
    info.author_seq = get_seq(*rp, "author_seq", lineno, rec.id);
    info.address_seq = get_seq(*rp, "address_seq", lineno, rec.id);
    if (info.author_seq > n_authors || info.address_seq > n_addresses)
      throw SemanticError("reprint references a missing author or address", rec.id);
    rec.reprint = info;
  }

  if (auto links = j.find("links"); links != j.end() && !links->is_null()) {
    if (!links->is_array()) throw FormatError("'links' is not an array", lineno);
    for (const json& l : *links) {
      if (!l.is_object()) throw FormatError("link entry is not an object", lineno);
      std::uint32_t a = get_seq(l, "author_seq", lineno, rec.id);
      std::uint32_t d = get_seq(l, "address_seq", lineno, rec.id);
      if (a > n_authors || d > n_addresses)
        throw SemanticError("dangling link (" + std::to_string(a) + ", " + std::to_string(d) + ")", rec.id);
      rec.links.emplace_back(a, d);
    }
    std::sort(rec.links.begin(), rec.links.end());
    rec.links.erase(std::unique(rec.links.begin(), rec.links.end()), rec.links.end());
  }

  return rec;
}

std::string serialize_record(const PublicationRecord& rec) {
  json j;
  j["id"] = rec.id;
  j["year"] = rec.year;
  json authors = json::array();
  for (const AuthorEntry& a : rec.authors) {
    json obj{{"seq", a.seq}, {"surname", a.surname}};
    if (!a.initials.empty()) obj["initials"] = a.initials;
    authors.push_back(std::move(obj));
  }
  j["authors"] = std::move(authors);
  json addresses = json::array();
  for (const AddressEntry& a : rec.addresses)
    addresses.push_back(json{{"seq", a.seq}, {"country", a.country}});
  j["addresses"] = std::move(addresses);
  if (rec.reprint)
    j["reprint"] = json{{"author_seq", rec.reprint->author_seq}, {"address_seq", rec.reprint->address_seq}};
  if (!rec.links.empty()) {
    json links = json::array();
    for (const auto& [a, d] : rec.links) links.push_back(json{{"author_seq", a}, {"address_seq", d}});
    j["links"] = std::move(links);
  }
  return j.dump();
}

JsonlReader::JsonlReader(std::istream& in, const CountryNormalizer& norm, ParseMode mode)
    : in_(in), norm_(norm), mode_(mode) {}

bool JsonlReader::next(PublicationRecord& out) {
  std::string line;
  while (std::getline(in_, line)) {
    ++stats_.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out = parse_record(line, norm_, stats_.lines);
      ++stats_.parsed;
      return true;
    } catch (const FormatError&) {
      ++stats_.format_errors;
      if (mode_ == ParseMode::Strict) throw;
    } catch (const SemanticError&) {
      ++stats_.semantic_errors;
      if (mode_ == ParseMode::Strict) throw;
    }
  }
  if (in_.bad()) throw IoError("read failure after line " + std::to_string(stats_.lines));
  return false;
}

}  // namespace surngeo
