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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dbw/dump_reader.hpp"
#include "synth.hpp"
#include "test_support.hpp"

namespace {

std::vector<std::string> SampleRecords(int n) {
  std::mt19937 rng(42);
  dbw_test::SynthOptions options;
  std::vector<std::string> records;
  records.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    records.push_back(dbw_test::EntityToDumpJson(
        dbw_test::RandomEntity(rng, static_cast<uint64_t>(i), options)));
  }
  return records;
}

void BM_ParseEntityRecord(benchmark::State& state) {
  auto records = SampleRecords(256);
  size_t bytes = 0;
  size_t i = 0;
  for (auto _ : state) {
    const std::string& record = records[i++ % records.size()];
    auto outcome = dbw::ParseEntityRecord(record);
    benchmark::DoNotOptimize(outcome);
    bytes += record.size();
  }
  state.SetBytesProcessed(static_cast<int64_t>(bytes));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ParseEntityRecord);

}  // namespace
