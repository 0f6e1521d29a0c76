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

#include "dbw/stats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "dbw/errors.hpp"
#include "dbw/ntriples.hpp"
#include "dbw/sink.hpp"
#include "dbw/triple.hpp"

namespace dbw {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::pair<std::string, uint64_t>> Ranked(
    const std::unordered_map<std::string, uint64_t>& counts) {
  std::vector<std::pair<std::string, uint64_t>> out(counts.begin(),
                                                    counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

Json RankedToJson(const std::vector<std::pair<std::string, uint64_t>>& list) {
  Json out = Json::array();
  for (const auto& [key, count] : list) {
    out.push_back({{"iri", key}, {"count", count}});
  }
  return out;
}

void AppendTop(std::ostringstream& out, std::string_view heading,
               const std::vector<std::pair<std::string, uint64_t>>& list,
               size_t limit = 5) {
  out << heading << "\n";
  size_t n = std::min(limit, list.size());
  for (size_t i = 0; i < n; ++i) {
    out << "  " << list[i].first << "  " << list[i].second << "\n";
  }
  if (list.empty()) out << "  (none)\n";
}

}  // namespace

void ExtractionCounters::MergeFrom(const ExtractionCounters& other) {
  entities += other.entities;
  redirect_records += other.redirect_records;
  records_malformed += other.records_malformed;
  records_skipped += other.records_skipped;
  statements_total += other.statements_total;
  statements_with_mapping += other.statements_with_mapping;
  snaks_skipped += other.snaks_skipped;
  deprecated_skipped += other.deprecated_skipped;
  low_precision_skipped += other.low_precision_skipped;
  template_inapplicable += other.template_inapplicable;
  sitelinks_skipped += other.sitelinks_skipped;
  hash_collisions += other.hash_collisions;
  redirect_rewrites += other.redirect_rewrites;
}

std::string ExtractionCounters::ToJson() const {
  Json j{{"entities", entities},
         {"redirect_records", redirect_records},
         {"records_malformed", records_malformed},
         {"records_skipped", records_skipped},
         {"statements_total", statements_total},
         {"statements_with_mapping", statements_with_mapping},
         {"snaks_skipped", snaks_skipped},
         {"deprecated_skipped", deprecated_skipped},
         {"low_precision_skipped", low_precision_skipped},
         {"template_inapplicable", template_inapplicable},
         {"sitelinks_skipped", sitelinks_skipped},
         {"hash_collisions", hash_collisions},
         {"redirect_rewrites", redirect_rewrites}};
  return j.dump(2);
}

ExtractionCounters ExtractionCounters::FromJson(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  ExtractionCounters c;
  if (j.is_discarded() || !j.is_object()) return c;
  c.entities = j.value("entities", 0u);
  c.redirect_records = j.value("redirect_records", 0u);
  c.records_malformed = j.value("records_malformed", 0u);
  c.records_skipped = j.value("records_skipped", 0u);
  c.statements_total = j.value("statements_total", 0u);
  c.statements_with_mapping = j.value("statements_with_mapping", 0u);
  c.snaks_skipped = j.value("snaks_skipped", 0u);
  c.deprecated_skipped = j.value("deprecated_skipped", 0u);
  c.low_precision_skipped = j.value("low_precision_skipped", 0u);
  c.template_inapplicable = j.value("template_inapplicable", 0u);
  c.sitelinks_skipped = j.value("sitelinks_skipped", 0u);
  c.hash_collisions = j.value("hash_collisions", 0u);
  c.redirect_rewrites = j.value("redirect_rewrites", 0u);
  return c;
}

std::filesystem::path CountersPath(const std::filesystem::path& out_dir) {
  return out_dir / "counters.json";
}
std::filesystem::path RedirectRecordsPath(
    const std::filesystem::path& out_dir) {
  return out_dir / "redirect-records.tsv";
}
std::filesystem::path CatalogPath(const std::filesystem::path& out_dir) {
  return out_dir / "catalog.json";
}
std::filesystem::path QuarantinePath(const std::filesystem::path& out_dir) {
  return out_dir / "quarantine.txt";
}

void WriteCounters(const std::filesystem::path& out_dir,
                   const ExtractionCounters& counters) {
  std::ofstream out(CountersPath(out_dir), std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write counters.json");
  out << counters.ToJson() << '\n';
}

ExtractionCounters ReadCounters(const std::filesystem::path& out_dir) {
  std::ifstream in(CountersPath(out_dir), std::ios::binary);
  if (!in) return {};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ExtractionCounters::FromJson(buffer.str());
}

StatsReport Summarize(const std::filesystem::path& out_dir,
                      const ExtractionCounters& counters) {
  Catalog catalog = ReadCatalog(out_dir);
  StatsReport report;
  report.counters = counters;
  report.quarantined = catalog.quarantined;

  std::unordered_map<std::string, uint64_t> classes;
  std::unordered_map<std::string, uint64_t> predicates;
  std::unordered_map<std::string, uint64_t> qualifier_predicates;
  std::unordered_map<std::string, uint64_t> wikidata_predicates;
  std::unordered_set<std::string> subjects;

  for (DatasetId id : kAllDatasets) {
    std::vector<Triple> triples = ReadDatasetFile(out_dir, catalog, id);
    report.triples_per_dataset[std::string(DatasetStem(id))] = triples.size();
    report.total_triples += triples.size();
    for (const Triple& t : triples) {
      subjects.insert(t.subject);
      ++predicates[t.predicate];
      if (id == DatasetId::kMappedTypes) {
        if (const auto* object = std::get_if<IriTerm>(&t.object)) {
          ++classes[object->iri];
        }
      } else if (id == DatasetId::kMappedQualifiers) {
        ++qualifier_predicates[t.predicate];
      } else if (id == DatasetId::kRawFacts) {
        ++wikidata_predicates[t.predicate];
      }
    }
  }

  report.unique_subjects = subjects.size();
  report.top_classes = Ranked(classes);
  report.top_properties = Ranked(predicates);
  report.top_mapped_qualifier_properties = Ranked(qualifier_predicates);
  report.top_wikidata_properties = Ranked(wikidata_predicates);
  report.mapping_coverage =
      counters.statements_total == 0
          ? 0.0
          : static_cast<double>(counters.statements_with_mapping) /
                static_cast<double>(counters.statements_total);
  return report;
}

std::string RenderStatsText(const StatsReport& report) {
  std::ostringstream out;
  out << "Datasets\n";
  for (DatasetId id : kAllDatasets) {
    auto stem = std::string(DatasetStem(id));
    auto it = report.triples_per_dataset.find(stem);
    uint64_t count = it == report.triples_per_dataset.end() ? 0 : it->second;
    out << "  " << stem;
    for (size_t pad = stem.size(); pad < 26; ++pad) out << ' ';
    out << count << "  " << DatasetTitle(id) << "\n";
  }
  out << "\nTotal triples: " << report.total_triples << "\n";
  out << "Unique subjects: " << report.unique_subjects << "\n";
  out << "Quarantined triples: " << report.quarantined << "\n";
  out << "Mapping coverage: " << report.mapping_coverage << "\n";
  out << "Redirect rewrites: " << report.counters.redirect_rewrites << "\n\n";
  AppendTop(out, "Top classes", report.top_classes);
  AppendTop(out, "Top properties", report.top_properties);
  AppendTop(out, "Top mapped qualifier properties",
            report.top_mapped_qualifier_properties);
  AppendTop(out, "Top Wikidata properties", report.top_wikidata_properties);
  return out.str();
}

void WriteStatsReport(const std::filesystem::path& out_dir,
                      const StatsReport& report) {
  Json datasets = Json::object();
  for (const auto& [stem, count] : report.triples_per_dataset) {
    datasets[stem] = count;
  }
  Json root{
      {"triples_per_dataset", datasets},
      {"total_triples", report.total_triples},
      {"unique_subjects", report.unique_subjects},
      {"quarantined", report.quarantined},
      {"mapping_coverage", report.mapping_coverage},
      {"redirect_rewrites", report.counters.redirect_rewrites},
      {"top_classes", RankedToJson(report.top_classes)},
      {"top_properties", RankedToJson(report.top_properties)},
      {"top_mapped_qualifier_properties",
       RankedToJson(report.top_mapped_qualifier_properties)},
      {"top_wikidata_properties", RankedToJson(report.top_wikidata_properties)},
      {"counters", Json::parse(report.counters.ToJson())},
  };
  std::ofstream json_out(out_dir / "stats.json",
                         std::ios::binary | std::ios::trunc);
  if (!json_out) throw IoError("cannot write stats.json");
  json_out << root.dump(2) << '\n';

  std::ofstream text_out(out_dir / "stats.txt",
                         std::ios::binary | std::ios::trunc);
  if (!text_out) throw IoError("cannot write stats.txt");
  text_out << RenderStatsText(report);
}

}  // namespace dbw
