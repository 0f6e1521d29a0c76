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

#include "dbw/postprocess.hpp"

namespace {

std::vector<dbw::RedirectRecord> ChainGraph(int n) {
  std::mt19937 rng(3);
  std::vector<dbw::RedirectRecord> records;
  records.reserve(static_cast<size_t>(n));
  for (int i = 2; i <= n; ++i) {
    uint64_t from = static_cast<uint64_t>(i);
    uint64_t to = std::uniform_int_distribution<uint64_t>(1, from - 1)(rng);
    records.push_back({dbw::Qid(from), dbw::Qid(to)});
  }
  return records;
}

void BM_RedirectClosure(benchmark::State& state) {
  auto records = ChainGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto closure = dbw::BuildRedirectClosure(records);
    benchmark::DoNotOptimize(closure);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(records.size()));
}
BENCHMARK(BM_RedirectClosure)->Range(1 << 8, 1 << 14);

}  // namespace
