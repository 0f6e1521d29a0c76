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

#include "dbw/sink.hpp"

#include <fstream>

#include <boost/iostreams/filter/gzip.hpp>
#include <boost/iostreams/filtering_stream.hpp>
#include <json.hpp>

#include "dbw/errors.hpp"
#include "dbw/ntriples.hpp"
#include "dbw/stats.hpp"

namespace dbw {
namespace {

namespace io = boost::iostreams;
using Json = nlohmann::ordered_json;

bool TripleIrisValid(const Triple& t) {
  if (!IsValidIri(t.subject) || !IsValidIri(t.predicate)) return false;
  if (const auto* object = std::get_if<IriTerm>(&t.object)) {
    return IsValidIri(object->iri);
  }
  if (const auto* lit = std::get_if<Literal>(&t.object)) {
    return lit->datatype.empty() || IsValidIri(lit->datatype);
  }
  return !std::get<LangLiteral>(t.object).lang.empty();
}

struct OwnedStream {
  std::ofstream file;
  io::filtering_ostream out;
  uint64_t bytes = 0;

  void Open(const std::filesystem::path& path, bool compress, bool append) {
    auto mode = std::ios::binary | (append ? std::ios::app : std::ios::trunc);
    file.open(path, mode);
    if (!file) throw IoError("cannot open " + path.string() + " for writing");
    if (compress) out.push(io::gzip_compressor());
    out.push(file);
  }

  void WriteLine(std::string_view line) {
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.put('\n');
    bytes += line.size() + 1;
    if (!out) throw IoError("write failure on dataset file");
  }

  void WriteRaw(std::string_view data) {
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    bytes += data.size();
    if (!out) throw IoError("write failure on dataset file");
  }

  void Close() {
    io::close(out);
    file.close();
  }
};

}  // namespace

std::string DatasetFileName(DatasetId id, bool compress) {
  std::string name(DatasetStem(id));
  name += compress ? ".nt.gz" : ".nt";
  return name;
}

struct DatasetSink::Impl {
  std::filesystem::path dir;
  bool compress = false;
  std::array<OwnedStream, kDatasetCount> streams;
  Catalog catalog;
  std::ofstream quarantine;
  bool closed = false;
};

DatasetSink::DatasetSink(const std::filesystem::path& out_dir, bool compress)
    : impl_(std::make_unique<Impl>()) {
  impl_->dir = out_dir;
  impl_->compress = compress;
  std::filesystem::create_directories(out_dir);
  for (DatasetId id : kAllDatasets) {
    auto index = static_cast<size_t>(id);
    std::string name = DatasetFileName(id, compress);
    impl_->catalog.datasets[index].file = name;
    impl_->streams[index].Open(out_dir / name, compress, /*append=*/false);
  }
}

DatasetSink::~DatasetSink() {
  if (impl_ && !impl_->closed) {
    try {
      Close();
    } catch (...) {
      // Destructor must not throw; Close() reports errors when called
      // explicitly.
    }
  }
}

void DatasetSink::WriteSerialized(DatasetId id, std::string_view line) {
  auto index = static_cast<size_t>(id);
  impl_->streams[index].WriteLine(line);
  ++impl_->catalog.datasets[index].triples;
}

void DatasetSink::WriteChunk(DatasetId id, std::string_view chunk,
                             uint64_t lines) {
  auto index = static_cast<size_t>(id);
  impl_->streams[index].WriteRaw(chunk);
  impl_->catalog.datasets[index].triples += lines;
}

void DatasetSink::Write(const Triple& triple) {
  if (!TripleIrisValid(triple)) {
    if (!impl_->quarantine.is_open()) {
      impl_->quarantine.open(QuarantinePath(impl_->dir),
                             std::ios::binary | std::ios::trunc);
    }
    impl_->quarantine << SerializeTriple(triple) << '\n';
    ++impl_->catalog.quarantined;
    return;
  }
  WriteSerialized(triple.dataset, SerializeTriple(triple));
}

void DatasetSink::Write(const std::vector<Triple>& triples) {
  for (const Triple& t : triples) Write(t);
}

Catalog DatasetSink::Close() {
  impl_->closed = true;
  for (DatasetId id : kAllDatasets) {
    auto index = static_cast<size_t>(id);
    impl_->streams[index].Close();
    impl_->catalog.datasets[index].bytes = std::filesystem::file_size(
        impl_->dir / impl_->catalog.datasets[index].file);
  }
  if (impl_->quarantine.is_open()) impl_->quarantine.close();
  return impl_->catalog;
}

void WriteCatalog(const std::filesystem::path& out_dir,
                  const Catalog& catalog) {
  Json datasets = Json::array();
  for (DatasetId id : kAllDatasets) {
    const CatalogEntry& entry = catalog.at(id);
    datasets.push_back({{"dataset", std::string(DatasetStem(id))},
                        {"title", std::string(DatasetTitle(id))},
                        {"file", entry.file},
                        {"triples", entry.triples},
                        {"bytes", entry.bytes}});
  }
  Json root{{"datasets", datasets}, {"quarantined", catalog.quarantined}};
  std::ofstream out(CatalogPath(out_dir), std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write catalog.json");
  out << root.dump(2) << '\n';
}

Catalog ReadCatalog(const std::filesystem::path& out_dir) {
  std::ifstream in(CatalogPath(out_dir), std::ios::binary);
  if (!in) {
    throw MissingDatasetError("no catalog.json in " + out_dir.string() +
                              " (run extract first)");
  }
  Json root = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded() || !root.contains("datasets")) {
    throw MissingDatasetError("catalog.json is unreadable");
  }
  Catalog catalog;
  catalog.quarantined = root.value("quarantined", 0u);
  for (const auto& entry : root["datasets"]) {
    auto id = DatasetFromStem(entry.value("dataset", ""));
    if (!id) continue;
    auto& slot = catalog.datasets[static_cast<size_t>(*id)];
    slot.file = entry.value("file", "");
    slot.triples = entry.value("triples", 0u);
    slot.bytes = entry.value("bytes", 0u);
  }
  for (DatasetId id : kAllDatasets) {
    if (catalog.at(id).file.empty()) {
      throw MissingDatasetError(std::string("catalog.json lacks dataset ") +
                                std::string(DatasetStem(id)));
    }
  }
  return catalog;
}

std::vector<Triple> ReadDatasetFile(const std::filesystem::path& out_dir,
                                    const Catalog& catalog, DatasetId id) {
  const CatalogEntry& entry = catalog.at(id);
  std::filesystem::path path = out_dir / entry.file;
  std::ifstream raw(path, std::ios::binary);
  if (!raw) throw MissingDatasetError("missing dataset file " + path.string());
  io::filtering_istream in;
  if (path.extension() == ".gz") in.push(io::gzip_decompressor());
  in.push(raw);

  std::vector<Triple> triples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto parsed = ParseNtLine(line);
    if (!parsed) {
      throw IoError("unparsable line in " + path.string() + ": " + line);
    }
    triples.push_back({std::move(parsed->subject), std::move(parsed->predicate),
                       std::move(parsed->object), id});
  }
  return triples;
}

void RewriteDatasetFile(const std::filesystem::path& out_dir, Catalog* catalog,
                        DatasetId id, const std::vector<Triple>& triples) {
  auto& entry = catalog->datasets[static_cast<size_t>(id)];
  bool compress = entry.file.ends_with(".gz");
  OwnedStream stream;
  stream.Open(out_dir / entry.file, compress, /*append=*/false);
  for (const Triple& t : triples) stream.WriteLine(SerializeTriple(t));
  stream.Close();
  entry.triples = triples.size();
  entry.bytes = std::filesystem::file_size(out_dir / entry.file);
}

void AppendDatasetFile(const std::filesystem::path& out_dir, Catalog* catalog,
                       DatasetId id, const std::vector<Triple>& triples) {
  if (triples.empty()) return;
  auto& entry = catalog->datasets[static_cast<size_t>(id)];
  bool compress = entry.file.ends_with(".gz");
  if (compress) {
    // Appending a second gzip member confuses some readers; rewrite.
    std::vector<Triple> all = ReadDatasetFile(out_dir, *catalog, id);
    all.insert(all.end(), triples.begin(), triples.end());
    RewriteDatasetFile(out_dir, catalog, id, all);
    return;
  }
  OwnedStream stream;
  stream.Open(out_dir / entry.file, /*compress=*/false, /*append=*/true);
  for (const Triple& t : triples) stream.WriteLine(SerializeTriple(t));
  stream.Close();
  entry.triples += triples.size();
  entry.bytes = std::filesystem::file_size(out_dir / entry.file);
}

}  // namespace dbw
