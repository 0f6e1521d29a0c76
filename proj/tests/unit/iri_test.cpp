// Copyright 2026 The DBW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <regex>
#include <set>

#include "dbw/iri.hpp"
#include "dbw/values.hpp"

using namespace dbw;

TEST_CASE("entity IRIs in the dw namespace") {
  CHECK(EntityIri(Qid(42)) == "http://wikidata.dbpedia.org/resource/Q42");
  CHECK(EntityIri(Qid(1)) == "http://wikidata.dbpedia.org/resource/Q1");
  CHECK(EntityIri(Pid(31)) == "http://wikidata.dbpedia.org/resource/P31");
  CHECK(WikidataIri(Qid(42)) == "http://wikidata.org/entity/Q42");
}

TEST_CASE("literal hash matches independently computed SHA-256 prefixes") {
  // Frozen with python3 hashlib.
  CHECK(LiteralHash("", 5) == "e3b0c");
  CHECK(LiteralHash("1991-11-25", 5) == "fe6e3");
  CHECK(LiteralHash("3520031", 5) == "58228");
  CHECK(LiteralHash("hello", 5) == "2cf24");
  CHECK(LiteralHash("hello", 10) == "2cf24dba5f");
  CHECK(LiteralHash("hello", 1) == "2");
  // Determinism.
  CHECK(LiteralHash("52.51667 13.38333", 5) ==
        LiteralHash("52.51667 13.38333", 5));
}

TEST_CASE("literal hash shape property") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> length(0, 40);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> n(1, 16);
  std::regex hex_shape("^[0-9a-f]+$");
  for (int i = 0; i < 500; ++i) {
    std::string input;
    int len = length(rng);
    for (int j = 0; j < len; ++j) input += static_cast<char>(byte(rng));
    int digits = n(rng);
    std::string hash = LiteralHash(input, digits);
    CHECK(hash.size() == static_cast<size_t>(digits));
    CHECK(std::regex_match(hash, hex_shape));
  }
}

TEST_CASE("statement IRIs") {
  CHECK(StatementIri(Qid(42), Pid(26), Qid(14623681)) ==
        "http://wikidata.dbpedia.org/resource/Q42_P26_Q14623681");
  CHECK(StatementIri(Qid(1), Pid(1), Qid(1)) ==
        "http://wikidata.dbpedia.org/resource/Q1_P1_Q1");
  // Literal values hash the converted lexical form.
  CHECK(StatementIri(Qid(64), Pid(1082), QuantityValue{"+3520031", "1"}) ==
        "http://wikidata.dbpedia.org/resource/Q64_P1082_58228");
  // Nothing to hash for SomeValue/NoValue.
  CHECK_FALSE(StatementIri(Qid(1), Pid(2), SomeValueMarker{}).has_value());
  CHECK_FALSE(StatementIri(Qid(1), Pid(2), NoValueMarker{}).has_value());
  CHECK_FALSE(
      StatementIri(Qid(1), Pid(2), UnsupportedValue{"tabular-data"}).has_value());
}

TEST_CASE("statement IRIs are injective over item values") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<uint64_t> num(1, 500);
  std::set<std::tuple<uint64_t, uint64_t, uint64_t>> inputs;
  std::set<std::string> iris;
  for (int i = 0; i < 2000; ++i) {
    auto s = num(rng);
    auto p = num(rng);
    auto v = num(rng);
    if (!inputs.emplace(s, p, v).second) continue;
    auto iri = StatementIri(Qid(s), Pid(p), Qid(v));
    REQUIRE(iri.has_value());
    CHECK(iris.insert(*iri).second);
  }
}

TEST_CASE("title encoding") {
  CHECK(EncodeTitleSegment("Douglas Adams") == "Douglas_Adams");
  CHECK(EncodeTitleSegment("C++ (language)") == "C++_(language)");
  CHECK(EncodeTitleSegment("a\"b") == "a%22b");
  CHECK(EncodeTitleSegment("50% off") == "50%25_off");
  CHECK(EncodeTitleSegment("what?") == "what%3F");
  // UTF-8 stays raw; IRIs are Unicode-capable.
  CHECK(EncodeTitleSegment("Köln") == "Köln");
}

TEST_CASE("DBpedia page IRIs per language") {
  CHECK(DbpediaPageIri("en", "Douglas Adams") ==
        "http://dbpedia.org/resource/Douglas_Adams");
  CHECK(DbpediaPageIri("de", "Douglas Adams") ==
        "http://de.dbpedia.org/resource/Douglas_Adams");
}

TEST_CASE("curie expansion") {
  CHECK(ExpandCurie("rdf:type") ==
        "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
  CHECK(ExpandCurie("dbo:Person") == "http://dbpedia.org/ontology/Person");
  CHECK(ExpandCurie("geo:lat") ==
        "http://www.w3.org/2003/01/geo/wgs84_pos#lat");
  CHECK(ExpandCurie("http://example.org/x") == "http://example.org/x");
  CHECK_FALSE(ExpandCurie("nosuch:thing").has_value());
  CHECK_FALSE(ExpandCurie("bareword").has_value());
}

TEST_CASE("date conversion per precision") {
  auto day = DateLexical({"+1991-11-25T00:00:00Z", 11, Qid(1985727)});
  REQUIRE(day.has_value());
  CHECK(day->first == "1991-11-25");
  CHECK(day->second == kXsdDate);

  // No zero padding, matching the month/day forms in the source data.
  auto unpadded = DateLexical({"+2001-05-11T00:00:00Z", 11, Qid(1985727)});
  REQUIRE(unpadded.has_value());
  CHECK(unpadded->first == "2001-5-11");

  auto month = DateLexical({"+1991-11-25T00:00:00Z", 10, Qid(1985727)});
  REQUIRE(month.has_value());
  CHECK(month->first == "1991-11");
  CHECK(month->second == kXsdGYearMonth);

  auto year = DateLexical({"+1991-11-25T00:00:00Z", 9, Qid(1985727)});
  REQUIRE(year.has_value());
  CHECK(year->first == "1991");
  CHECK(year->second == kXsdGYear);

  // Century precision and below have no lexical form here.
  CHECK_FALSE(DateLexical({"+1991-11-25T00:00:00Z", 7, Qid(1985727)}).has_value());
  // Bare date strings parse too.
  auto bare = DateLexical({"1991-11-25", 11, Qid(1985727)});
  REQUIRE(bare.has_value());
  CHECK(bare->first == "1991-11-25");
  // Negative years keep the sign.
  auto bce = DateLexical({"-0500-01-01T00:00:00Z", 9, Qid(1985727)});
  REQUIRE(bce.has_value());
  CHECK(bce->first == "-500");
}

TEST_CASE("double formatting is shortest round-trip") {
  CHECK(FormatDouble(52.51667) == "52.51667");
  CHECK(FormatDouble(13.38333) == "13.38333");
  CHECK(FormatDouble(-1.5) == "-1.5");
  CHECK(FormatDouble(0) == "0");
}
