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

#include "dbw/pipeline.hpp"

#include <condition_variable>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "dbw/dump_reader.hpp"
#include "dbw/errors.hpp"
#include "dbw/extractors.hpp"
#include "dbw/iri.hpp"
#include "dbw/mapping.hpp"
#include "dbw/ntriples.hpp"
#include "dbw/ontology.hpp"
#include "dbw/postprocess.hpp"
#include "dbw/sink.hpp"
#include "dbw/values.hpp"

namespace dbw {
namespace {

constexpr size_t kBatchRecords = 64;
constexpr size_t kMaxQueuedBatches = 64;

struct Batch {
  uint64_t seq = 0;
  std::vector<RawRecord> records;
};

// Per-batch extraction output, already serialized so workers carry the
// serialization cost. Lines are concatenated per dataset to keep
// allocations off the hot path.
struct BatchResult {
  std::array<std::string, kDatasetCount> chunks;
  std::array<uint64_t, kDatasetCount> line_counts{};
  std::vector<Triple> quarantined;
  std::vector<RedirectRecord> redirects;
  ExtractionCounters counters;

  void Add(const Triple& t) {
    auto index = static_cast<size_t>(t.dataset);
    std::string& chunk = chunks[index];
    chunk += SerializeTriple(t);
    chunk += '\n';
    ++line_counts[index];
  }
};

// Single-producer multi-consumer batch queue with a bounded reorder
// window, so dataset files come out in input order regardless of the
// worker count.
class WorkQueue {
 public:
  void Push(Batch&& batch) {
    std::unique_lock lock(mu_);
    not_full_.wait(lock, [this] { return queue_.size() < kMaxQueuedBatches; });
    queue_.push_back(std::move(batch));
    not_empty_.notify_one();
  }

  void CloseInput() {
    std::lock_guard lock(mu_);
    done_ = true;
    not_empty_.notify_all();
  }

  bool Pop(Batch* out) {
    std::unique_lock lock(mu_);
    not_empty_.wait(lock, [this] { return done_ || !queue_.empty(); });
    if (queue_.empty()) return false;
    *out = std::move(queue_.front());
    queue_.pop_front();
    not_full_.notify_one();
    return true;
  }

 private:
  std::mutex mu_;
  std::condition_variable not_empty_;
  std::condition_variable not_full_;
  std::deque<Batch> queue_;
  bool done_ = false;
};

// Collects batch results and releases them strictly in sequence order.
class ReorderBuffer {
 public:
  void Deliver(uint64_t seq, BatchResult&& result) {
    std::unique_lock lock(mu_);
    window_ok_.wait(lock, [this, seq] {
      return seq < next_ + 2 * kMaxQueuedBatches;
    });
    pending_.emplace(seq, std::move(result));
    ready_.notify_all();
  }

  // Blocks until batch `next` arrives or all producers finished.
  bool TakeNext(BatchResult* out) {
    std::unique_lock lock(mu_);
    ready_.wait(lock, [this] {
      return pending_.contains(next_) || (producers_ == 0 && pending_.empty());
    });
    auto it = pending_.find(next_);
    if (it == pending_.end()) return false;
    *out = std::move(it->second);
    pending_.erase(it);
    ++next_;
    window_ok_.notify_all();
    return true;
  }

  void ProducerDone() {
    std::lock_guard lock(mu_);
    --producers_;
    ready_.notify_all();
  }

  void SetProducers(int n) { producers_ = n; }

 private:
  std::mutex mu_;
  std::condition_variable ready_;
  std::condition_variable window_ok_;
  std::map<uint64_t, BatchResult> pending_;
  uint64_t next_ = 0;
  int producers_ = 0;
};

bool TripleIsWritable(const Triple& t) {
  if (!IsValidIri(t.subject) || !IsValidIri(t.predicate)) return false;
  if (const auto* object = std::get_if<IriTerm>(&t.object)) {
    return IsValidIri(object->iri);
  }
  return true;
}

BatchResult ProcessBatch(const Batch& batch, const MappingTable& rules,
                         const EquivalenceMap& em, const Ontology& onto,
                         const std::set<std::string>& mapped_languages) {
  BatchResult result;
  for (const RawRecord& record : batch.records) {
    ParseOutcome outcome = ParseEntityRecord(record.text);
    if (const auto* entity = std::get_if<Entity>(&outcome)) {
      std::vector<Triple> triples = ExtractAll(*entity, rules, em, onto,
                                               mapped_languages,
                                               &result.counters);
      for (Triple& t : triples) {
        if (TripleIsWritable(t)) {
          result.Add(t);
        } else {
          result.quarantined.push_back(std::move(t));
        }
      }
    } else if (const auto* redirect = std::get_if<RedirectRecord>(&outcome)) {
      ++result.counters.redirect_records;
      result.redirects.push_back(*redirect);
      for (const Triple& t : ExtractRedirect(*redirect)) {
        result.Add(t);
      }
    } else if (std::holds_alternative<SkippedRecord>(outcome)) {
      ++result.counters.records_skipped;
    } else {
      ++result.counters.records_malformed;
    }
  }
  return result;
}

void ValidateRunConfig(const RunConfig& cfg) {
  if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
  for (const auto& [name, path] :
       {std::pair{"dump", cfg.dump_path},
        std::pair{"ontology", cfg.ontology_path},
        std::pair{"mappings", cfg.mappings_path}}) {
    if (!std::filesystem::exists(path)) {
      throw ConfigError(std::string(name) + " file not found: " +
                        path.string());
    }
  }
  if (cfg.output_dir.empty()) throw ConfigError("output directory not set");
}

void WriteRedirectRecords(const std::filesystem::path& out_dir,
                          const std::vector<RedirectRecord>& records) {
  std::ofstream out(RedirectRecordsPath(out_dir),
                    std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write redirect side file");
  for (const RedirectRecord& r : records) {
    out << r.from.ToString() << '\t' << r.to.ToString() << '\n';
  }
}

std::vector<RedirectRecord> ReadRedirectRecords(
    const std::filesystem::path& out_dir) {
  std::ifstream in(RedirectRecordsPath(out_dir), std::ios::binary);
  if (!in) {
    throw MissingDatasetError("no redirect-records.tsv in " +
                              out_dir.string() + " (run extract first)");
  }
  std::vector<RedirectRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    auto from = EntityId::Parse(std::string_view(line).substr(0, tab));
    auto to = EntityId::Parse(std::string_view(line).substr(tab + 1));
    if (from && to) records.push_back({*from, *to});
  }
  return records;
}

// The post-extraction passes shared by `extract` and `validate`:
// 1. transitive redirect closure, applied to every dataset;
// 2. the redirects dataset rewritten with final targets;
// 3. transitive type inference from the resolved direct types;
// 4. disjointness validation over the mapped fact datasets.
StatsReport RunPostprocess(const std::filesystem::path& out_dir,
                           const OntologyBundle& bundle) {
  Catalog catalog = ReadCatalog(out_dir);
  ExtractionCounters counters = ReadCounters(out_dir);
  std::vector<RedirectRecord> records = ReadRedirectRecords(out_dir);

  RedirectClosure closure = BuildRedirectClosure(records);
  uint64_t rewrites = 0;
  for (DatasetId id : kAllDatasets) {
    if (id == DatasetId::kRedirects) continue;
    rewrites += ResolveDatasetFile(out_dir / catalog.at(id).file, closure);
  }
  counters.redirect_rewrites += rewrites;

  // Redirects dataset: one triple per resolved source, already pointing
  // at the final target ("explicit & transitive" collapsed).
  std::vector<Triple> redirect_triples;
  for (const auto& [from, to] : closure.resolved) {
    redirect_triples.push_back({EntityIri(from), kDboWikiPageRedirects,
                                IriTerm{EntityIri(to)}, DatasetId::kRedirects});
  }
  RewriteDatasetFile(out_dir, &catalog, DatasetId::kRedirects,
                     redirect_triples);

  // Transitive types, regenerated from scratch each pass.
  TypeIndex index = BuildTypeIndex(
      ReadDatasetFile(out_dir, catalog, DatasetId::kMappedTypes));
  RewriteDatasetFile(out_dir, &catalog, DatasetId::kMappedTransitiveTypes,
                     InferTransitiveTypes(index, bundle.ontology));

  // Disjointness validation over the object-valued mapped datasets.
  // Rejections accumulate in ontology-errors.
  std::vector<Triple> all_rejected;
  for (DatasetId id : {DatasetId::kMappedFacts, DatasetId::kMappedImages,
                       DatasetId::kMappedExternalSameAs}) {
    std::vector<Triple> facts = ReadDatasetFile(out_dir, catalog, id);
    DisjointnessPartition partition =
        ValidateDisjointness(facts, index, bundle.ontology);
    if (!partition.rejected.empty()) {
      RewriteDatasetFile(out_dir, &catalog, id, partition.accepted);
      all_rejected.insert(all_rejected.end(), partition.rejected.begin(),
                          partition.rejected.end());
    }
  }
  AppendDatasetFile(out_dir, &catalog, DatasetId::kOntologyErrors,
                    all_rejected);

  // Refresh counts from the files and publish.
  for (DatasetId id : kAllDatasets) {
    auto& entry = catalog.datasets[static_cast<size_t>(id)];
    std::vector<Triple> triples = ReadDatasetFile(out_dir, catalog, id);
    entry.triples = triples.size();
    entry.bytes = std::filesystem::file_size(out_dir / entry.file);
  }
  WriteCatalog(out_dir, catalog);
  WriteCounters(out_dir, counters);
  StatsReport report = Summarize(out_dir, counters);
  WriteStatsReport(out_dir, report);
  return report;
}

}  // namespace

StatsReport RunExtract(const RunConfig& cfg) {
  ValidateRunConfig(cfg);
  OntologyBundle bundle = LoadOntologyFile(cfg.ontology_path);
  MappingTable rules = LoadMappingConfigFile(cfg.mappings_path);
  std::set<std::string> mapped_languages(cfg.mapped_languages.begin(),
                                         cfg.mapped_languages.end());

  std::filesystem::create_directories(cfg.output_dir);
  DatasetSink sink(cfg.output_dir, cfg.compress);

  WorkQueue queue;
  ReorderBuffer reorder;
  reorder.SetProducers(cfg.workers);

  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(cfg.workers));
  for (int i = 0; i < cfg.workers; ++i) {
    workers.emplace_back([&] {
      Batch batch;
      while (queue.Pop(&batch)) {
        reorder.Deliver(batch.seq,
                        ProcessBatch(batch, rules, bundle.equivalences,
                                     bundle.ontology, mapped_languages));
      }
      reorder.ProducerDone();
    });
  }

  ExtractionCounters counters;
  std::vector<RedirectRecord> redirects;
  std::exception_ptr writer_error;
  std::thread writer([&] {
    BatchResult result;
    // Keeps draining after a failure so producers never block on the
    // reorder window.
    while (reorder.TakeNext(&result)) {
      if (writer_error) continue;
      try {
        for (DatasetId id : kAllDatasets) {
          auto index = static_cast<size_t>(id);
          if (result.line_counts[index] > 0) {
            sink.WriteChunk(id, result.chunks[index],
                            result.line_counts[index]);
          }
        }
        for (const Triple& t : result.quarantined) {
          sink.Write(t);  // routes to the quarantine file
        }
        redirects.insert(redirects.end(), result.redirects.begin(),
                         result.redirects.end());
        counters.MergeFrom(result.counters);
      } catch (...) {
        writer_error = std::current_exception();
      }
    }
  });

  std::exception_ptr reader_error;
  try {
    DumpLineSource source(cfg.dump_path);
    uint64_t seq = 0;
    Batch batch;
    batch.seq = seq;
    while (auto record = source.Next()) {
      batch.records.push_back(std::move(*record));
      if (batch.records.size() >= kBatchRecords) {
        queue.Push(std::move(batch));
        batch = Batch{};
        batch.seq = ++seq;
      }
    }
    if (!batch.records.empty()) queue.Push(std::move(batch));
  } catch (...) {
    reader_error = std::current_exception();
  }
  queue.CloseInput();
  for (std::thread& worker : workers) worker.join();
  writer.join();
  if (reader_error) std::rethrow_exception(reader_error);
  if (writer_error) std::rethrow_exception(writer_error);

  Catalog catalog = sink.Close();
  WriteCatalog(cfg.output_dir, catalog);
  WriteRedirectRecords(cfg.output_dir, redirects);
  WriteCounters(cfg.output_dir, counters);

  if (!cfg.skip_postprocess) {
    return RunPostprocess(cfg.output_dir, bundle);
  }
  StatsReport report = Summarize(cfg.output_dir, counters);
  WriteStatsReport(cfg.output_dir, report);
  return report;
}

StatsReport RunValidateOnly(const ValidateConfig& cfg) {
  if (!std::filesystem::exists(cfg.ontology_path)) {
    throw ConfigError("ontology file not found: " +
                      cfg.ontology_path.string());
  }
  OntologyBundle bundle = LoadOntologyFile(cfg.ontology_path);
  return RunPostprocess(cfg.output_dir, bundle);
}

StatsReport ComputeStats(const std::filesystem::path& output_dir) {
  ExtractionCounters counters = ReadCounters(output_dir);
  StatsReport report = Summarize(output_dir, counters);
  WriteStatsReport(output_dir, report);
  return report;
}

}  // namespace dbw
