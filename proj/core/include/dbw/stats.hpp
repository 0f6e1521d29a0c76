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

#ifndef DBW_STATS_HPP_
#define DBW_STATS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dbw {

// Counters accumulated while extracting. Mergeable across workers.
struct ExtractionCounters {
  uint64_t entities = 0;
  uint64_t redirect_records = 0;
  uint64_t records_malformed = 0;
  uint64_t records_skipped = 0;
  uint64_t statements_total = 0;
  uint64_t statements_with_mapping = 0;
  uint64_t snaks_skipped = 0;          // SomeValue/NoValue/unsupported
  uint64_t deprecated_skipped = 0;     // deprecated rank, mapped path
  uint64_t low_precision_skipped = 0;  // time precision below year
  uint64_t template_inapplicable = 0;
  uint64_t sitelinks_skipped = 0;  // non-Wikipedia sitelinks
  uint64_t hash_collisions = 0;
  uint64_t redirect_rewrites = 0;  // cumulative over postprocess passes

  void MergeFrom(const ExtractionCounters& other);

  std::string ToJson() const;
  static ExtractionCounters FromJson(const std::string& text);
};

// The report the paper's §5 statistics map onto, at artifact scale.
struct StatsReport {
  std::map<std::string, uint64_t> triples_per_dataset;  // by file stem
  uint64_t total_triples = 0;
  uint64_t unique_subjects = 0;
  uint64_t quarantined = 0;
  double mapping_coverage = 0.0;  // mapped / total statement occurrences
  std::vector<std::pair<std::string, uint64_t>> top_classes;
  std::vector<std::pair<std::string, uint64_t>> top_properties;
  std::vector<std::pair<std::string, uint64_t>> top_mapped_qualifier_properties;
  std::vector<std::pair<std::string, uint64_t>> top_wikidata_properties;
  ExtractionCounters counters;
};

// Side files kept next to the datasets.
std::filesystem::path CountersPath(const std::filesystem::path& out_dir);
std::filesystem::path RedirectRecordsPath(const std::filesystem::path& out_dir);
std::filesystem::path CatalogPath(const std::filesystem::path& out_dir);
std::filesystem::path QuarantinePath(const std::filesystem::path& out_dir);

void WriteCounters(const std::filesystem::path& out_dir,
                   const ExtractionCounters& counters);
ExtractionCounters ReadCounters(const std::filesystem::path& out_dir);

// Recounts every dataset file and merges the extraction counters into a
// report. Ranked lists are sorted by descending count, ties broken
// lexicographically.
StatsReport Summarize(const std::filesystem::path& out_dir,
                      const ExtractionCounters& counters);

// stats.json + stats.txt.
void WriteStatsReport(const std::filesystem::path& out_dir,
                      const StatsReport& report);

std::string RenderStatsText(const StatsReport& report);

}  // namespace dbw

#endif  // DBW_STATS_HPP_
