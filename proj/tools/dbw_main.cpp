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

// Command line driver: converts Wikidata entity-JSON dumps into the
// DBpedia-flavored N-Triples dataset family.
//
//   dbw extract  --dump d.json --ontology o.txt --mappings m.json --out dir
//   dbw validate --out dir --ontology o.txt
//   dbw stats    --out dir

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dbw/errors.hpp"
#include "dbw/pipeline.hpp"
#include "dbw/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

void PrintReport(const dbw::StatsReport& report) {
  std::cout << dbw::RenderStatsText(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wikidata dump to DBpedia-style RDF dataset converter"};
  app.require_subcommand(1);

  dbw::RunConfig run_cfg;
  std::string languages;
  auto* extract = app.add_subcommand("extract", "Run the full extraction");
  extract->add_option("--dump", run_cfg.dump_path, "Entity-JSON dump file")
      ->required();
  extract->add_option("--ontology", run_cfg.ontology_path, "Ontology file")
      ->required();
  extract->add_option("--mappings", run_cfg.mappings_path,
                      "Value-transformation mapping config (JSON)")
      ->required();
  extract->add_option("--out", run_cfg.output_dir, "Output directory")
      ->required();
  extract->add_option("--languages", languages,
                      "Comma-separated mapped languages for cross-language "
                      "sameAs links (e.g. en,de,fr)");
  extract->add_option("--workers", run_cfg.workers, "Extraction workers")
      ->check(CLI::PositiveNumber);
  extract->add_flag("--compress", run_cfg.compress,
                    "gzip-compress the dataset files");
  extract->add_flag("--skip-postprocess", run_cfg.skip_postprocess,
                    "Skip redirect resolution, transitive types and "
                    "ontology validation");

  dbw::ValidateConfig validate_cfg;
  auto* validate =
      app.add_subcommand("validate", "Post-process an existing extraction");
  validate->add_option("--out", validate_cfg.output_dir, "Output directory")
      ->required();
  validate->add_option("--ontology", validate_cfg.ontology_path,
                       "Ontology file")
      ->required();

  std::string stats_dir;
  auto* stats = app.add_subcommand("stats", "Recompute and print statistics");
  stats->add_option("--out", stats_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (extract->parsed()) {
      for (size_t start = 0; start < languages.size();) {
        size_t comma = languages.find(',', start);
        if (comma == std::string::npos) comma = languages.size();
        if (comma > start) {
          run_cfg.mapped_languages.push_back(
              languages.substr(start, comma - start));
        }
        start = comma + 1;
      }
      PrintReport(dbw::RunExtract(run_cfg));
    } else if (validate->parsed()) {
      PrintReport(dbw::RunValidateOnly(validate_cfg));
    } else if (stats->parsed()) {
      PrintReport(dbw::ComputeStats(stats_dir));
    }
  } catch (const dbw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const dbw::MissingDatasetError& e) {
    std::cerr << "missing dataset: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
