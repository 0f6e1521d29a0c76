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

#ifndef DBW_DUMP_READER_HPP_
#define DBW_DUMP_READER_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "dbw/entity.hpp"

namespace dbw {

// A record that parsed but is not converted: query/lexeme/... entity
// pages, which have no defined structure here. Counted, never fatal.
struct SkippedRecord {
  std::string id;
  std::string reason;
  bool operator==(const SkippedRecord&) const = default;
};

// Per-record failure; the surrounding stream continues.
struct RecordError {
  std::string message;
  bool operator==(const RecordError&) const = default;
};

using ParseOutcome =
    std::variant<Entity, RedirectRecord, SkippedRecord, RecordError>;

// Parses one complete entity-JSON record. Unknown JSON fields are
// ignored; unknown snak datatypes become UnsupportedValue markers.
// Never throws on malformed input: that becomes a RecordError.
ParseOutcome ParseEntityRecord(std::string_view json_text);

struct RawRecord {
  std::string text;
  uint64_t offset = 0;  // byte offset of the record in the (uncompressed) dump
};

// Streams raw records out of a dump file. Handles the array layout
// (records separated by ",\n") and the one-object-per-line layout,
// detected from the first non-whitespace byte, and transparently
// decompresses .gz/.bz2 files. Construction and mid-stream I/O failures
// throw IoError; record-level problems are left to the parser.
class DumpLineSource {
 public:
  explicit DumpLineSource(const std::filesystem::path& path);
  ~DumpLineSource();
  DumpLineSource(DumpLineSource&&) noexcept;
  DumpLineSource& operator=(DumpLineSource&&) noexcept;

  // Next record text, or nullopt at end of stream.
  std::optional<RawRecord> Next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct StreamItem {
  ParseOutcome outcome;
  uint64_t offset = 0;
};

// Sequential parse of a whole dump: yields every record exactly once in
// file order; malformed records come out as RecordError without
// aborting the stream.
class EntityStream {
 public:
  explicit EntityStream(const std::filesystem::path& path) : source_(path) {}
  std::optional<StreamItem> Next();

 private:
  DumpLineSource source_;
};

}  // namespace dbw

#endif  // DBW_DUMP_READER_HPP_
