// Copyright 2026 The bhg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "bhg/greedy.hpp"
#include "bhg/parallel_scan.hpp"
#include "bhg/sumrep.hpp"

namespace {

using namespace bhg;

std::vector<Value> prefix(int h, int g, std::size_t n) {
  return strong_greedy({h, g, n}).terms;
}

void BM_AddElement(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  const auto terms = prefix(h, 2, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    SumTableSet t(h);
    for (Value a : terms) t.add_element(a);
    benchmark::DoNotOptimize(t.total_entries());
  }
}
BENCHMARK(BM_AddElement)->Args({2, 30})->Args({3, 20})->Args({4, 12});

void BM_CandidateDelta(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  SumTableSet t(h);
  for (Value a : prefix(h, 2, 20)) t.add_element(a);
  CandidateDelta d;
  Value m = 1;
  for (auto _ : state) {
    t.candidate_delta_into(m++, d);
    benchmark::DoNotOptimize(d.added.data());
  }
}
BENCHMARK(BM_CandidateDelta)->Arg(2)->Arg(3);

void BM_StrongGreedy(benchmark::State& state) {
  const Params p{static_cast<int>(state.range(0)),
                 static_cast<int>(state.range(1)),
                 static_cast<std::size_t>(state.range(2))};
  for (auto _ : state) benchmark::DoNotOptimize(strong_greedy(p).terms.back());
}
BENCHMARK(BM_StrongGreedy)
    ->Args({2, 1, 50})
    ->Args({2, 3, 30})
    ->Args({3, 2, 20})
    ->Unit(benchmark::kMillisecond);

// Scan overhead only: a trivial predicate accepting near the end.
void BM_ParallelScan(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  const std::uint64_t target = 1'000'000;
  for (auto _ : state) {
    auto hit = find_first_accepting(1, 2 * target, workers,
                                    [&](unsigned, std::uint64_t m) {
                                      return m * 7919 % 1'000'003 == 0 ||
                                             m == target;
                                    });
    benchmark::DoNotOptimize(hit);
  }
}
BENCHMARK(BM_ParallelScan)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
