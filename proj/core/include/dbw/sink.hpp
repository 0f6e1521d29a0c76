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

#ifndef DBW_SINK_HPP_
#define DBW_SINK_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dbw/triple.hpp"

namespace dbw {

struct CatalogEntry {
  std::string file;  // file name within the output directory
  uint64_t triples = 0;
  uint64_t bytes = 0;
};

struct Catalog {
  std::array<CatalogEntry, kDatasetCount> datasets;
  uint64_t quarantined = 0;

  const CatalogEntry& at(DatasetId id) const {
    return datasets[static_cast<size_t>(id)];
  }
};

// Serializes triples into one N-Triples file per dataset. Exactly one
// owner may write; producers hand triples over to that owner. Triples
// with a syntactically invalid IRI are dropped to a quarantine file and
// counted instead of corrupting a dataset.
class DatasetSink {
 public:
  // Creates (truncates) all dataset files up front so the catalog always
  // enumerates every member.
  DatasetSink(const std::filesystem::path& out_dir, bool compress);
  ~DatasetSink();
  DatasetSink(const DatasetSink&) = delete;
  DatasetSink& operator=(const DatasetSink&) = delete;

  void Write(const Triple& triple);
  void Write(const std::vector<Triple>& triples);
  // Appends an already serialized N-Triples statement (no newline).
  void WriteSerialized(DatasetId id, std::string_view line);
  // Appends pre-serialized, newline-terminated lines in one write.
  void WriteChunk(DatasetId id, std::string_view chunk, uint64_t lines);

  // Flushes and closes every file; returns the final catalog.
  Catalog Close();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Dataset file name for a stem under the chosen compression.
std::string DatasetFileName(DatasetId id, bool compress);

void WriteCatalog(const std::filesystem::path& out_dir, const Catalog& catalog);
Catalog ReadCatalog(const std::filesystem::path& out_dir);

// Reads every triple of one dataset file (plain or gzip). Lines that do
// not parse raise IoError: the files are machine-written.
std::vector<Triple> ReadDatasetFile(const std::filesystem::path& out_dir,
                                    const Catalog& catalog, DatasetId id);

// Rewrites one dataset file from scratch with the given triples,
// keeping the catalog entry consistent.
void RewriteDatasetFile(const std::filesystem::path& out_dir, Catalog* catalog,
                        DatasetId id, const std::vector<Triple>& triples);

// Appends triples to an existing dataset file.
void AppendDatasetFile(const std::filesystem::path& out_dir, Catalog* catalog,
                       DatasetId id, const std::vector<Triple>& triples);

}  // namespace dbw

#endif  // DBW_SINK_HPP_
