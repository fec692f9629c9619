#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "surngeo/errors.hpp"
#include "surngeo/normalize.hpp"
#include "surngeo/unicode.hpp"
#include "test_util.hpp"

using namespace surngeo;

TEST_SUITE_BEGIN("normalize");

TEST_CASE("surname case folding keeps diacritics") {
  CHECK(normalize_surname("García") == "GARCÍA");
  CHECK(normalize_surname("GARCÍA") == "GARCÍA");
  CHECK(normalize_surname("müller") == "MÜLLER");
  CHECK(normalize_surname("ñandú") == "ÑANDÚ");
}

TEST_CASE("surname trim and whitespace collapse") {
  CHECK(normalize_surname("  van der Berg ") == "VAN DER BERG");
  CHECK(normalize_surname(" van \t der \t Berg ") == "VAN DER BERG");
  CHECK(normalize_surname("van der Berg") == "VAN DER BERG");  // no-break spaces
}

TEST_CASE("surname hyphens preserved") {
  CHECK(normalize_surname("robinson-garcia") == "ROBINSON-GARCIA");
  CHECK(normalize_surname("O'Neill") == "O'NEILL");
}

TEST_CASE("surname combining marks compose") {
  // 'i' U+0069 + combining acute U+0301 composes to the same bytes as í.
  CHECK(normalize_surname("Garci\xCC\x81"
                          "a") == normalize_surname("García"));
  CHECK(normalize_surname("Garci\xCC\x81"
                          "a") == "GARCÍA");
}

TEST_CASE("surname sharp s uppercases to SS") {
  CHECK(normalize_surname("Weißmüller") == "WEISSMÜLLER");
}

TEST_CASE("surname rejection marker") {
  CHECK(normalize_surname("") == "");
  CHECK(normalize_surname("   ") == "");
  CHECK(normalize_surname("\t  ") == "");
}

TEST_CASE("surname normalization is idempotent") {
  std::mt19937 rng(12345);
  const std::vector<std::string> pieces = {
      "a", "Z", "ö", "ß", "í", "i\xCC\x81", " ", "  ", "-", "'", "\t", " ",
      "Ж", "λ", "ş", "ø", "Č", "ẞ", "ǰ", "大", "."};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 12);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s += pieces[pick(rng)];
    std::string once = normalize_surname(s);
    CHECK(normalize_surname(once) == once);
  }
}

TEST_CASE("country defaults and fallthrough") {
  CountryNormalizer norm;
  CHECK(norm.normalize("USSR") == "RUSSIA");
  CHECK(norm.normalize("ussr ") == "RUSSIA");
  CHECK(norm.normalize("Fed Rep Ger") == "GERMANY");
  CHECK(norm.normalize("Peoples R China") == "CHINA");
  CHECK(norm.normalize("Netherlands") == "NETHERLANDS");
  CHECK(norm.normalize("") == "");
  CHECK(norm.normalize("  ") == "");
}

TEST_CASE("country normalization is idempotent") {
  CountryNormalizer norm;
  for (const char* raw : {"USSR", "Fed Rep Ger", "netherlands", "  Spain ", "Côte d'Ivoire"}) {
    std::string once = norm.normalize(raw);
    CHECK(norm.normalize(once) == once);
  }
}

TEST_CASE("load_country_map file entries and overrides") {
  testutil::TempDir tmp("countrymap");
  auto path = tmp.path("map.tsv");

  SUBCASE("identity entry retained") {
    testutil::spit(path, "ENGLAND\tENGLAND\n");
    CountryNormalizer norm = load_country_map(path);
    CHECK(norm.normalize("England") == "ENGLAND");
  }
  SUBCASE("empty file keeps defaults only") {
    testutil::spit(path, "");
    CountryNormalizer norm = load_country_map(path);
    CHECK(norm.normalize("USSR") == "RUSSIA");
    CHECK(norm.aliases().size() == 3);
  }
  SUBCASE("lookup through a file alias") {
    testutil::spit(path, "UK\tENGLAND\n");
    CountryNormalizer norm = load_country_map(path);
    CHECK(normalize_country("UK", norm) == "ENGLAND");
    CHECK(normalize_country("uk", norm) == "ENGLAND");
  }
  SUBCASE("file overrides a default") {
    testutil::spit(path, "USSR\tSOVIET UNION\n");
    CountryNormalizer norm = load_country_map(path);
    CHECK(norm.normalize("USSR") == "SOVIET UNION");
  }
  SUBCASE("conflicting duplicate keys rejected") {
    testutil::spit(path, "UK\tENGLAND\nUK\tBRITAIN\n");
    CHECK_THROWS_AS(load_country_map(path), ConfigError);
  }
  SUBCASE("alias chain rejected") {
    testutil::spit(path, "RUSSIA\tMUSCOVY\n");  // USSR -> RUSSIA -> MUSCOVY would chain
    CHECK_THROWS_AS(load_country_map(path), ConfigError);
  }
  SUBCASE("bad column count rejected") {
    testutil::spit(path, "UK\n");
    CHECK_THROWS_AS(load_country_map(path), FormatError);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(load_country_map(tmp.path("nope.tsv")), IoError); }
}

TEST_CASE("utf8 decoding is total") {
  // Arbitrary byte garbage must decode (to replacement chars), never crash.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 200; ++trial) {
    std::string s;
    for (int i = 0; i < 32; ++i) s.push_back(static_cast<char>(byte(rng)));
    std::string out = normalize_surname(s);
    CHECK(normalize_surname(out) == out);
  }
}

TEST_SUITE_END();
