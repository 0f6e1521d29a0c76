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

#include "dbw/iri.hpp"
#include "dbw/ntriples.hpp"
#include "dbw/sink.hpp"
#include "dbw/stats.hpp"
#include "dbw/values.hpp"
#include "nt_oracle.hpp"
#include "synth.hpp"
#include "test_support.hpp"

using namespace dbw;
using dbw_test::TempDir;

TEST_CASE("the label line from the running example, byte for byte") {
  Triple t{"http://wikidata.dbpedia.org/resource/Q42",
           std::string(kRdfsNs) + "label", LangLiteral{"Douglas Adams", "en"},
           DatasetId::kLabels};
  CHECK(SerializeTriple(t) ==
        "<http://wikidata.dbpedia.org/resource/Q42> "
        "<http://www.w3.org/2000/01/rdf-schema#label> "
        "\"Douglas Adams\"@en .");
}

TEST_CASE("typed literal serialization") {
  Triple t{"http://wikidata.dbpedia.org/resource/Q42_P26_Q14623681",
           "http://dbpedia.org/ontology/startDate",
           Literal{"1991-11-25", kXsdDate}, DatasetId::kMappedQualifiers};
  CHECK(SerializeTriple(t) ==
        "<http://wikidata.dbpedia.org/resource/Q42_P26_Q14623681> "
        "<http://dbpedia.org/ontology/startDate> "
        "\"1991-11-25\"^^<http://www.w3.org/2001/XMLSchema#date> .");
}

TEST_CASE("escaping: quote, backslash, newline, tab") {
  CHECK(EscapeNtLiteral("say \"hi\"") == "say \\\"hi\\\"");
  CHECK(EscapeNtLiteral("a\\b") == "a\\\\b");
  CHECK(EscapeNtLiteral("line1\nline2") == "line1\\nline2");
  CHECK(EscapeNtLiteral("col1\tcol2") == "col1\\tcol2");
  CHECK(EscapeNtLiteral("cr\r") == "cr\\r");
  CHECK(EscapeNtLiteral("bell\x07") == "bell\\u0007");
}

TEST_CASE("escape round-trips through the oracle parser") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> byte(1, 255);
  std::uniform_int_distribution<int> length(0, 60);
  for (int i = 0; i < 500; ++i) {
    std::string lexical;
    int n = length(rng);
    for (int j = 0; j < n; ++j) lexical += static_cast<char>(byte(rng));
    Triple t{"http://example.org/s", "http://example.org/p",
             Literal{lexical, ""}, DatasetId::kLabels};
    auto oracle = dbw_test::OracleParseLine(SerializeTriple(t));
    REQUIRE(oracle.has_value());
    CHECK(oracle->object.value == lexical);
  }
}

TEST_CASE("product line parser inverts the serializer") {
  std::mt19937 rng(2);
  for (int i = 0; i < 300; ++i) {
    dbw::SnakValue value = dbw_test::RandomValue(rng, false);
    auto term = RawTermForValue(value);
    if (!term) continue;
    Triple t{"http://example.org/s" + std::to_string(i),
             "http://example.org/p", *term, DatasetId::kRawFacts};
    auto parsed = ParseNtLine(SerializeTriple(t));
    REQUIRE(parsed.has_value());
    CHECK(parsed->subject == t.subject);
    CHECK(parsed->predicate == t.predicate);
    CHECK(parsed->object == t.object);
  }
}

TEST_CASE("sink creates every dataset file, empty ones included") {
  TempDir dir("sink");
  DatasetSink sink(dir.path(), /*compress=*/false);
  Catalog catalog = sink.Close();
  for (DatasetId id : kAllDatasets) {
    CHECK(std::filesystem::exists(dir.path() / catalog.at(id).file));
    CHECK(catalog.at(id).triples == 0);
    CHECK(std::filesystem::file_size(dir.path() / catalog.at(id).file) == 0);
  }
  CHECK(catalog.quarantined == 0);
}

TEST_CASE("sink counts triples and bytes per dataset") {
  TempDir dir("sink");
  DatasetSink sink(dir.path(), false);
  sink.Write(Triple{"http://wikidata.dbpedia.org/resource/Q1",
                    std::string(kRdfsNs) + "label", LangLiteral{"one", "en"},
                    DatasetId::kLabels});
  sink.Write(Triple{"http://wikidata.dbpedia.org/resource/Q2",
                    std::string(kRdfsNs) + "label", LangLiteral{"two", "en"},
                    DatasetId::kLabels});
  Catalog catalog = sink.Close();
  CHECK(catalog.at(DatasetId::kLabels).triples == 2);
  CHECK(catalog.at(DatasetId::kLabels).bytes ==
        std::filesystem::file_size(dir.path() / "labels.nt"));
  auto lines = dbw_test::ReadDatasetLines(dir.path() / "labels.nt");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "<http://wikidata.dbpedia.org/resource/Q1> "
        "<http://www.w3.org/2000/01/rdf-schema#label> \"one\"@en .");
}

TEST_CASE("invalid IRIs are quarantined, not written") {
  TempDir dir("sink");
  DatasetSink sink(dir.path(), false);
  sink.Write(Triple{"http://example.org/bad iri", "http://example.org/p",
                    IriTerm{"http://example.org/o"}, DatasetId::kRawFacts});
  sink.Write(Triple{"http://example.org/s", "http://example.org/p",
                    IriTerm{"no scheme at all"}, DatasetId::kRawFacts});
  Catalog catalog = sink.Close();
  CHECK(catalog.at(DatasetId::kRawFacts).triples == 0);
  CHECK(catalog.quarantined == 2);
  CHECK(std::filesystem::exists(QuarantinePath(dir.path())));
}

TEST_CASE("catalog round-trips through catalog.json") {
  TempDir dir("sink");
  DatasetSink sink(dir.path(), false);
  sink.Write(Triple{"http://wikidata.dbpedia.org/resource/Q1",
                    std::string(kRdfsNs) + "label", LangLiteral{"x", "en"},
                    DatasetId::kLabels});
  Catalog catalog = sink.Close();
  WriteCatalog(dir.path(), catalog);
  Catalog reread = ReadCatalog(dir.path());
  for (DatasetId id : kAllDatasets) {
    CHECK(reread.at(id).file == catalog.at(id).file);
    CHECK(reread.at(id).triples == catalog.at(id).triples);
    CHECK(reread.at(id).bytes == catalog.at(id).bytes);
  }
}

TEST_CASE("gzip-compressed datasets read back identically") {
  TempDir dir("sink");
  DatasetSink sink(dir.path(), /*compress=*/true);
  Triple t{"http://wikidata.dbpedia.org/resource/Q1",
           std::string(kRdfsNs) + "label", LangLiteral{"eins", "de"},
           DatasetId::kLabels};
  sink.Write(t);
  Catalog catalog = sink.Close();
  CHECK(catalog.at(DatasetId::kLabels).file == "labels.nt.gz");
  auto triples = ReadDatasetFile(dir.path(), catalog, DatasetId::kLabels);
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].subject == t.subject);
  CHECK(triples[0].object == t.object);
}

TEST_CASE("single-owner writes are byte-deterministic across runs") {
  auto run = [](const std::filesystem::path& dir) {
    DatasetSink sink(dir, false);
    for (int i = 1; i <= 20; ++i) {
      sink.Write(Triple{"http://wikidata.dbpedia.org/resource/Q" +
                            std::to_string(i),
                        std::string(kRdfsNs) + "label",
                        LangLiteral{"t" + std::to_string(i), "en"},
                        DatasetId::kLabels});
    }
    sink.Close();
  };
  TempDir a("sink-a");
  TempDir b("sink-b");
  run(a.path());
  run(b.path());
  CHECK(dbw_test::ReadFileText(a.path() / "labels.nt") ==
        dbw_test::ReadFileText(b.path() / "labels.nt"));
}

TEST_CASE("summarize ranks ties lexicographically") {
  TempDir dir("stats");
  DatasetSink sink(dir.path(), false);
  auto type_triple = [](const std::string& q, const std::string& cls) {
    return Triple{"http://wikidata.dbpedia.org/resource/" + q,
                  kRdfType, IriTerm{"http://dbpedia.org/ontology/" + cls},
                  DatasetId::kMappedTypes};
  };
  sink.Write(type_triple("Q1", "Person"));
  sink.Write(type_triple("Q2", "Person"));
  sink.Write(type_triple("Q3", "Place"));
  WriteCatalog(dir.path(), sink.Close());

  ExtractionCounters counters;
  counters.statements_total = 4;
  counters.statements_with_mapping = 3;
  StatsReport report = Summarize(dir.path(), counters);
  REQUIRE(report.top_classes.size() == 2);
  CHECK(report.top_classes[0].first == "http://dbpedia.org/ontology/Person");
  CHECK(report.top_classes[0].second == 2);
  CHECK(report.mapping_coverage == doctest::Approx(0.75));
  CHECK(report.unique_subjects == 3);
  CHECK(report.total_triples == 3);
}

TEST_CASE("empty output summarizes to zero coverage") {
  TempDir dir("stats");
  DatasetSink sink(dir.path(), false);
  WriteCatalog(dir.path(), sink.Close());
  StatsReport report = Summarize(dir.path(), ExtractionCounters{});
  CHECK(report.mapping_coverage == 0.0);
  CHECK(report.total_triples == 0);
}
