#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "surngeo/errors.hpp"
#include "surngeo/linkage.hpp"

using namespace surngeo;

namespace {

PublicationRecord make_record(std::string id, std::vector<std::string> surnames,
                              std::vector<std::string> countries,
                              std::optional<ReprintInfo> reprint = {},
                              std::vector<std::pair<std::uint32_t, std::uint32_t>> links = {}) {
  PublicationRecord rec;
  rec.id = std::move(id);
  rec.year = 2000;
  for (std::size_t i = 0; i < surnames.size(); ++i)
    rec.authors.push_back({static_cast<std::uint32_t>(i + 1), std::move(surnames[i]), ""});
  for (std::size_t i = 0; i < countries.size(); ++i)
    rec.addresses.push_back({static_cast<std::uint32_t>(i + 1), std::move(countries[i])});
  rec.reprint = reprint;
  rec.links = std::move(links);
  std::sort(rec.links.begin(), rec.links.end());
  return rec;
}

}  // namespace

TEST_SUITE_BEGIN("linkage");

TEST_CASE("single-country record links every author once") {
  auto rec = make_record("p1", {"NOYONS", "COSTAS"}, {"NETHERLANDS", "NETHERLANDS"});
  auto out = extract_linkages(rec);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == TrustedLinkage{"COSTAS", "NETHERLANDS", "p1", LinkRule::SingleCountry});
  CHECK(out[1] == TrustedLinkage{"NOYONS", "NETHERLANDS", "p1", LinkRule::FirstAuthor});
}

TEST_CASE("reprint and first-author on a two-country record") {
  auto rec = make_record("p2", {"ROBINSON-GARCIA", "NOYONS"}, {"SPAIN", "NETHERLANDS"},
                         ReprintInfo{2, 2});
  auto out = extract_linkages(rec);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == TrustedLinkage{"NOYONS", "NETHERLANDS", "p2", LinkRule::Reprint});
  CHECK(out[1] == TrustedLinkage{"ROBINSON-GARCIA", "SPAIN", "p2", LinkRule::FirstAuthor});
}

TEST_CASE("no addresses, no evidence") {
  auto rec = make_record("p3", {"SMITH", "LEE"}, {});
  CHECK(extract_linkages(rec).empty());
}

TEST_CASE("no authors, no evidence") {
  auto rec = make_record("p4", {}, {"SPAIN"});
  CHECK(extract_linkages(rec).empty());
}

TEST_CASE("single-country rule stays off with two distinct countries") {
  auto rec = make_record("p5", {"A", "B"}, {"SPAIN", "FRANCE"});
  auto out = extract_linkages(rec);
  REQUIRE(out.size() == 1);  // only the first-author pair
  CHECK(out[0] == TrustedLinkage{"A", "SPAIN", "p5", LinkRule::FirstAuthor});
}

TEST_CASE("rule priority on overlapping evidence") {
  SUBCASE("reprint beats registered and first-author") {
    auto rec = make_record("p6", {"A"}, {"X"}, ReprintInfo{1, 1}, {{1, 1}});
    auto out = extract_linkages(rec);
    REQUIRE(out.size() == 1);
    CHECK(out[0].rule == LinkRule::Reprint);
  }
  SUBCASE("registered beats first-author") {
    auto rec = make_record("p7", {"A"}, {"X"}, std::nullopt, {{1, 1}});
    auto out = extract_linkages(rec);
    REQUIRE(out.size() == 1);
    CHECK(out[0].rule == LinkRule::Registered);
  }
  SUBCASE("first-author beats single-country") {
    auto rec = make_record("p8", {"A"}, {"X"});
    auto out = extract_linkages(rec);
    REQUIRE(out.size() == 1);
    CHECK(out[0].rule == LinkRule::FirstAuthor);
  }
}

TEST_CASE("same surname on several authors deduplicates") {
  auto rec = make_record("p9", {"KIM", "KIM", "KIM"}, {"USA", "USA"}, ReprintInfo{1, 1},
                         {{1, 1}, {2, 2}});
  auto out = extract_linkages(rec);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == TrustedLinkage{"KIM", "USA", "p9", LinkRule::Reprint});
}

TEST_CASE("same surname keeps linkages to two countries") {
  auto rec = make_record("p10", {"DUBOIS"}, {"FRANCE", "NETHERLANDS"}, ReprintInfo{1, 2});
  auto out = extract_linkages(rec);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == TrustedLinkage{"DUBOIS", "FRANCE", "p10", LinkRule::FirstAuthor});
  CHECK(out[1] == TrustedLinkage{"DUBOIS", "NETHERLANDS", "p10", LinkRule::Reprint});
}

TEST_CASE("output invariant under link permutation") {
  std::mt19937 rng(31);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> links = {{1, 1}, {2, 2}, {3, 1}, {2, 1}};
  auto base = make_record("p11", {"A", "B", "C"}, {"X", "Y"}, std::nullopt, links);
  auto expected = extract_linkages(base);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(links.begin(), links.end(), rng);
    auto rec = base;
    rec.links = links;
    CHECK(extract_linkages(rec) == expected);
  }
}

TEST_CASE("emitted names always come from the record") {
  std::mt19937 rng(57);
  std::uniform_int_distribution<int> na(0, 4), nd(0, 3), coin(0, 1);
  const std::vector<std::string> pool = {"A", "B", "C", "D"};
  const std::vector<std::string> cpool = {"X", "Y", "Z"};
  for (int t = 0; t < 300; ++t) {
    std::vector<std::string> surnames, countries;
    int a = na(rng), d = nd(rng);
    for (int i = 0; i < a; ++i) surnames.push_back(pool[static_cast<std::size_t>(rng() % pool.size())]);
    for (int i = 0; i < d; ++i) countries.push_back(cpool[static_cast<std::size_t>(rng() % cpool.size())]);
    std::optional<ReprintInfo> rp;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
    if (a > 0 && d > 0) {
      if (coin(rng)) rp = ReprintInfo{static_cast<std::uint32_t>(1 + rng() % a),
                                      static_cast<std::uint32_t>(1 + rng() % d)};
      for (int i = 0; i < 3; ++i)
        if (coin(rng))
          links.emplace_back(static_cast<std::uint32_t>(1 + rng() % a),
                             static_cast<std::uint32_t>(1 + rng() % d));
    }
    auto rec = make_record("t" + std::to_string(t), surnames, countries, rp, links);
    std::set<std::string> rec_surnames(surnames.begin(), surnames.end());
    std::set<std::string> rec_countries(countries.begin(), countries.end());
    std::set<std::pair<std::string, std::string>> seen;
    bool multi_country = rec_countries.size() > 1;
    for (const auto& l : extract_linkages(rec)) {
      CHECK(rec_surnames.count(l.surname) == 1);
      CHECK(rec_countries.count(l.country) == 1);
      CHECK(l.pub_id == rec.id);
      CHECK(seen.emplace(l.surname, l.country).second);  // no duplicate pair
      if (multi_country) CHECK(l.rule != LinkRule::SingleCountry);
    }
  }
}

TEST_CASE("stream extraction preserves record order") {
  CountryNormalizer norm;
  SUBCASE("empty stream") {
    std::istringstream in("");
    std::vector<TrustedLinkage> got;
    auto stats = stream_extract(in, norm, ParseMode::Lenient,
                                [&](const TrustedLinkage& l) { got.push_back(l); });
    CHECK(got.empty());
    CHECK(stats.linkages == 0);
    CHECK(stats.read.lines == 0);
  }
  SUBCASE("two records in order") {
    std::istringstream in(
        R"({"id":"s1","year":2000,"authors":[{"seq":1,"surname":"A"}],"addresses":[{"seq":1,"country":"X"}]})"
        "\n"
        R"({"id":"s2","year":2000,"authors":[{"seq":1,"surname":"B"}],"addresses":[{"seq":1,"country":"Y"}]})"
        "\n");
    std::vector<TrustedLinkage> got;
    auto stats = stream_extract(in, norm, ParseMode::Lenient,
                                [&](const TrustedLinkage& l) { got.push_back(l); });
    REQUIRE(got.size() == 2);
    CHECK(got[0].pub_id == "s1");
    CHECK(got[1].pub_id == "s2");
    CHECK(stats.linkages == 2);
    CHECK(stats.read.parsed == 2);
  }
}

TEST_CASE("linkage tsv round-trip and errors") {
  std::vector<TrustedLinkage> rows = {{"GARCÍA", "SPAIN", "p1", LinkRule::FirstAuthor},
                                      {"LEE", "USA", "p2", LinkRule::Registered}};
  std::ostringstream out;
  for (const auto& l : rows) write_linkage_row(out, l);
  std::istringstream in(out.str());
  CHECK(read_linkages(in) == rows);

  std::istringstream bad_rule("A\tB\tp\tNOT_A_RULE\n");
  CHECK_THROWS_AS(read_linkages(bad_rule), FormatError);
  std::istringstream bad_cols("A\tB\tp\n");
  CHECK_THROWS_AS(read_linkages(bad_cols), FormatError);
  std::istringstream empty_col("\tB\tp\tREPRINT\n");
  CHECK_THROWS_AS(read_linkages(empty_col), FormatError);
}

TEST_SUITE_END();
