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

#include <algorithm>
#include <map>

#include "dbw/errors.hpp"
#include "dbw/pipeline.hpp"
#include "dbw/sink.hpp"
#include "dbw/stats.hpp"
#include "dbw/triple.hpp"
#include "synth.hpp"
#include "test_support.hpp"

using namespace dbw;
using dbw_test::FixturePath;
using dbw_test::ReadDatasetLines;
using dbw_test::SortedDatasetLines;
using dbw_test::TempDir;

namespace {

RunConfig FixtureConfig(const std::filesystem::path& out) {
  RunConfig cfg;
  cfg.dump_path = FixturePath("fixture.dump.json");
  cfg.ontology_path = FixturePath("fixture.ontology.txt");
  cfg.mappings_path = FixturePath("fixture.mappings.json");
  cfg.output_dir = out;
  cfg.mapped_languages = {"en", "de"};
  return cfg;
}

bool Contains(const std::vector<std::string>& lines, const std::string& line) {
  return std::find(lines.begin(), lines.end(), line) != lines.end();
}

}  // namespace

TEST_CASE("fixture run: reified marriage block and redirect resolution") {
  TempDir dir("pipe");
  StatsReport report = RunExtract(FixtureConfig(dir.path()));

  auto reified = ReadDatasetLines(dir.path() / "mapped-facts-reified.nt");
  CHECK(Contains(reified,
                 "<http://wikidata.dbpedia.org/resource/Q42_P26_Q14623681> "
                 "<http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> "
                 "<http://dbpedia.org/ontology/spouse> ."));

  auto qualifiers = ReadDatasetLines(dir.path() / "mapped-qualifiers.nt");
  CHECK(Contains(qualifiers,
                 "<http://wikidata.dbpedia.org/resource/Q42_P26_Q14623681> "
                 "<http://dbpedia.org/ontology/startDate> "
                 "\"1991-11-25\"^^<http://www.w3.org/2001/XMLSchema#date> ."));

  // The geo listing.
  auto coordinates = ReadDatasetLines(dir.path() / "mapped-coordinates.nt");
  CHECK(coordinates.size() == 4);
  CHECK(Contains(coordinates,
                 "<http://wikidata.dbpedia.org/resource/Q64> "
                 "<http://www.w3.org/2003/01/geo/wgs84_pos#lat> "
                 "\"52.51667\"^^<http://www.w3.org/2001/XMLSchema#float> ."));
  CHECK(Contains(coordinates,
                 "<http://wikidata.dbpedia.org/resource/Q64> "
                 "<http://www.georss.org/georss/point> "
                 "\"52.51667 13.38333\" ."));

  // Redirect chain Q9 -> Q7 -> Q3 fully collapsed.
  auto redirects = SortedDatasetLines(dir.path() / "redirects.nt");
  REQUIRE(redirects.size() == 2);
  CHECK(redirects[0] ==
        "<http://wikidata.dbpedia.org/resource/Q7> "
        "<http://dbpedia.org/ontology/wikiPageRedirects> "
        "<http://wikidata.dbpedia.org/resource/Q3> .");
  CHECK(redirects[1] ==
        "<http://wikidata.dbpedia.org/resource/Q9> "
        "<http://dbpedia.org/ontology/wikiPageRedirects> "
        "<http://wikidata.dbpedia.org/resource/Q3> .");

  // Q1337's raw P361 -> Q7 object was rewritten to the final target.
  auto raw = ReadDatasetLines(dir.path() / "raw-facts.nt");
  CHECK(Contains(raw,
                 "<http://wikidata.dbpedia.org/resource/Q1337> "
                 "<http://wikidata.org/entity/P361> "
                 "<http://wikidata.dbpedia.org/resource/Q3> ."));
  CHECK(report.counters.redirect_rewrites > 0);

  // Validation split: the string spouse is a mapping error, the
  // Place-typed spouse an ontology error.
  auto mapping_errors = ReadDatasetLines(dir.path() / "mapping-errors.nt");
  REQUIRE(mapping_errors.size() == 1);
  CHECK(Contains(mapping_errors,
                 "<http://wikidata.dbpedia.org/resource/Q1337> "
                 "<http://dbpedia.org/ontology/spouse> \"oops\" ."));
  auto ontology_errors = ReadDatasetLines(dir.path() / "ontology-errors.nt");
  REQUIRE(ontology_errors.size() == 1);
  CHECK(Contains(ontology_errors,
                 "<http://wikidata.dbpedia.org/resource/Q1337> "
                 "<http://dbpedia.org/ontology/spouse> "
                 "<http://wikidata.dbpedia.org/resource/Q3> ."));
  // And it was removed from mapped-facts.
  auto mapped_facts = ReadDatasetLines(dir.path() / "mapped-facts.nt");
  CHECK_FALSE(Contains(mapped_facts,
                       "<http://wikidata.dbpedia.org/resource/Q1337> "
                       "<http://dbpedia.org/ontology/spouse> "
                       "<http://wikidata.dbpedia.org/resource/Q3> ."));

  // Transitive types: Q64 is a City, so PopulatedPlace/Place/owl:Thing.
  auto transitive = ReadDatasetLines(dir.path() /
                                     "mapped-transitive-types.nt");
  CHECK(Contains(transitive,
                 "<http://wikidata.dbpedia.org/resource/Q64> "
                 "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
                 "<http://dbpedia.org/ontology/Place> ."));

  // Sitelink pair count for Q42 (en + de mapped): 2 dw links + 2 pairs,
  // plus Q64's en link.
  auto sitelinks = ReadDatasetLines(dir.path() / "sitelinks.nt");
  CHECK(sitelinks.size() == 5);

  // The deprecated P31 statement on Q1337 must not add a mapped type.
  auto types = ReadDatasetLines(dir.path() / "mapped-types.nt");
  for (const auto& line : types) {
    CHECK(line.find("Q1337") == std::string::npos);
  }

  CHECK(report.mapping_coverage > 0.0);
  CHECK(report.mapping_coverage < 1.0);
  CHECK(report.counters.snaks_skipped >= 2);  // somevalue + unsupported
  CHECK(report.counters.records_skipped == 0);
  CHECK(std::filesystem::exists(dir.path() / "stats.json"));
  CHECK(std::filesystem::exists(dir.path() / "stats.txt"));
  CHECK(std::filesystem::exists(dir.path() / "catalog.json"));
}

TEST_CASE("fixture run matches the golden files byte for byte") {
  TempDir dir("pipe-golden");
  RunConfig cfg = FixtureConfig(dir.path());
  cfg.workers = 1;
  RunExtract(cfg);
  for (DatasetId id : kAllDatasets) {
    auto name = std::string(DatasetStem(id)) + ".nt";
    CHECK_MESSAGE(dbw_test::ReadFileText(dir.path() / name) ==
                      dbw_test::ReadFileText(FixturePath("golden") / name),
                  name);
  }
}

TEST_CASE("skip-postprocess leaves raw extraction state") {
  TempDir dir("pipe");
  RunConfig cfg = FixtureConfig(dir.path());
  cfg.skip_postprocess = true;
  RunExtract(cfg);

  CHECK(ReadDatasetLines(dir.path() / "mapped-transitive-types.nt").empty());
  CHECK(ReadDatasetLines(dir.path() / "ontology-errors.nt").empty());

  // Redirects stay explicit: Q9 still points at Q7.
  auto redirects = SortedDatasetLines(dir.path() / "redirects.nt");
  REQUIRE(redirects.size() == 2);
  CHECK(redirects[1] ==
        "<http://wikidata.dbpedia.org/resource/Q9> "
        "<http://dbpedia.org/ontology/wikiPageRedirects> "
        "<http://wikidata.dbpedia.org/resource/Q7> .");

  // The raw fact object is unresolved.
  auto raw = ReadDatasetLines(dir.path() / "raw-facts.nt");
  CHECK(Contains(raw,
                 "<http://wikidata.dbpedia.org/resource/Q1337> "
                 "<http://wikidata.org/entity/P361> "
                 "<http://wikidata.dbpedia.org/resource/Q7> ."));
}

TEST_CASE("extract then validate equals the full pipeline") {
  TempDir full("pipe-full");
  TempDir split("pipe-split");
  RunExtract(FixtureConfig(full.path()));

  RunConfig cfg = FixtureConfig(split.path());
  cfg.skip_postprocess = true;
  RunExtract(cfg);
  RunValidateOnly({split.path(), FixturePath("fixture.ontology.txt")});

  for (DatasetId id : kAllDatasets) {
    auto name = std::string(DatasetStem(id)) + ".nt";
    CHECK_MESSAGE(dbw_test::ReadFileText(full.path() / name) ==
                      dbw_test::ReadFileText(split.path() / name),
                  name);
  }
}

TEST_CASE("validate is idempotent") {
  TempDir dir("pipe");
  RunExtract(FixtureConfig(dir.path()));
  std::map<std::string, std::string> before;
  for (DatasetId id : kAllDatasets) {
    auto name = std::string(DatasetStem(id)) + ".nt";
    before[name] = dbw_test::ReadFileText(dir.path() / name);
  }
  StatsReport second =
      RunValidateOnly({dir.path(), FixturePath("fixture.ontology.txt")});
  for (const auto& [name, content] : before) {
    CHECK_MESSAGE(dbw_test::ReadFileText(dir.path() / name) == content, name);
  }
  // Cumulative rewrite counter does not move on the second pass.
  StatsReport third =
      RunValidateOnly({dir.path(), FixturePath("fixture.ontology.txt")});
  CHECK(second.counters.redirect_rewrites ==
        third.counters.redirect_rewrites);
}

TEST_CASE("validate without prior extraction reports missing datasets") {
  TempDir dir("pipe");
  CHECK_THROWS_AS(
      RunValidateOnly({dir.path(), FixturePath("fixture.ontology.txt")}),
      MissingDatasetError);
}

TEST_CASE("empty dump produces empty datasets and zero coverage") {
  TempDir dir("pipe");
  auto dump = dir.path() / "empty.json";
  dbw_test::WriteFileText(dump, "[]");
  RunConfig cfg = FixtureConfig(dir.path() / "out");
  cfg.dump_path = dump;
  StatsReport report = RunExtract(cfg);
  CHECK(report.total_triples == 0);
  CHECK(report.mapping_coverage == 0.0);
  for (const auto& [stem, count] : report.triples_per_dataset) {
    CHECK(count == 0);
  }
}

TEST_CASE("config errors") {
  TempDir dir("pipe");
  RunConfig cfg = FixtureConfig(dir.path());
  cfg.dump_path = "/nonexistent/dump.json";
  CHECK_THROWS_AS(RunExtract(cfg), ConfigError);

  cfg = FixtureConfig(dir.path());
  cfg.workers = 0;
  CHECK_THROWS_AS(RunExtract(cfg), ConfigError);
}

TEST_CASE("worker count does not change the output bytes") {
  TempDir dumps("pipe-dumps");
  auto dump = dumps.path() / "synth.json";
  dbw_test::SynthOptions options;
  options.redirect_fraction = 0.05;
  dbw_test::WriteSyntheticDump(dump, 200, 4242, options);

  auto run = [&](int workers, const std::filesystem::path& out) {
    RunConfig cfg = FixtureConfig(out);
    cfg.dump_path = dump;
    cfg.workers = workers;
    return RunExtract(cfg);
  };
  TempDir one("pipe-w1");
  TempDir four("pipe-w4");
  run(1, one.path());
  run(4, four.path());
  for (DatasetId id : kAllDatasets) {
    auto name = std::string(DatasetStem(id)) + ".nt";
    CHECK_MESSAGE(dbw_test::ReadFileText(one.path() / name) ==
                      dbw_test::ReadFileText(four.path() / name),
                  name);
  }
}

TEST_CASE("compressed output reads back with identical content") {
  TempDir plain("pipe-plain");
  TempDir gz("pipe-gz");
  RunExtract(FixtureConfig(plain.path()));
  RunConfig cfg = FixtureConfig(gz.path());
  cfg.compress = true;
  RunExtract(cfg);
  for (DatasetId id : kAllDatasets) {
    auto stem = std::string(DatasetStem(id));
    auto plain_lines = SortedDatasetLines(plain.path() / (stem + ".nt"));
    auto gz_lines = SortedDatasetLines(gz.path() / (stem + ".nt.gz"));
    CHECK_MESSAGE(plain_lines == gz_lines, stem);
  }
}

TEST_CASE("stats subcommand recomputes from existing output") {
  TempDir dir("pipe");
  StatsReport original = RunExtract(FixtureConfig(dir.path()));
  StatsReport recomputed = ComputeStats(dir.path());
  CHECK(recomputed.total_triples == original.total_triples);
  CHECK(recomputed.triples_per_dataset == original.triples_per_dataset);
  CHECK(recomputed.mapping_coverage ==
        doctest::Approx(original.mapping_coverage));
}
