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

#ifndef DBW_PIPELINE_HPP_
#define DBW_PIPELINE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "dbw/stats.hpp"

namespace dbw {

struct RunConfig {
  std::filesystem::path dump_path;
  std::filesystem::path ontology_path;
  std::filesystem::path mappings_path;
  std::filesystem::path output_dir;
  std::vector<std::string> mapped_languages;
  int workers = 1;
  bool compress = false;
  bool skip_postprocess = false;
};

// Full pipeline: stream -> parse -> extract -> sink, then the
// post-processing passes (redirect closure and resolution, transitive
// types, disjointness validation). Throws ConfigError for an unusable
// configuration and IoError for fatal I/O problems.
StatsReport RunExtract(const RunConfig& cfg);

struct ValidateConfig {
  std::filesystem::path output_dir;
  std::filesystem::path ontology_path;
};

// Post-processing only, over an existing extraction output. Idempotent:
// a second invocation leaves the datasets unchanged.
StatsReport RunValidateOnly(const ValidateConfig& cfg);

// Recomputes stats.json/stats.txt from an existing output directory.
StatsReport ComputeStats(const std::filesystem::path& output_dir);

}  // namespace dbw

#endif  // DBW_PIPELINE_HPP_
