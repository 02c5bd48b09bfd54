// Copyright 2026 The tiltc developers
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

#include "tilt/benchgen.hpp"
#include "tilt/blocking.hpp"
#include "tilt/depgraph.hpp"
#include "tilt/scheduler.hpp"
#include "tilt/verifier.hpp"

namespace {

void BM_DependencyGraph(benchmark::State& state) {
  tilt::Circuit c =
      tilt::generate_benchmark("qft", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tilt::build_dependency_graph(c));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(c.gates.size()));
}
BENCHMARK(BM_DependencyGraph)->Arg(64)->Arg(128);

void BM_Blocking(benchmark::State& state) {
  tilt::Circuit c =
      tilt::generate_benchmark("qft", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tilt::tilt_blocking(c, 16));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(c.gates.size()));
}
BENCHMARK(BM_Blocking)->Arg(64)->Arg(128)->Arg(180);

void BM_CompileBoss(benchmark::State& state) {
  tilt::Circuit c =
      tilt::generate_benchmark("qft", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto blocks = tilt::tilt_blocking(c, 16);
    benchmark::DoNotOptimize(tilt::schedule_blocks(blocks, c, 16));
  }
}
BENCHMARK(BM_CompileBoss)->Arg(64)->Arg(128)->Arg(180);

void BM_CompileBaseline(benchmark::State& state) {
  tilt::Circuit c =
      tilt::generate_benchmark("qft", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tilt::schedule_baseline(c, 16));
  }
}
BENCHMARK(BM_CompileBaseline)->Arg(64);

void BM_Verify(benchmark::State& state) {
  tilt::Circuit c =
      tilt::generate_benchmark("qft", static_cast<int>(state.range(0)));
  auto blocks = tilt::tilt_blocking(c, 16);
  tilt::Schedule s = tilt::schedule_blocks(blocks, c, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tilt::verify(c, s, 16));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(s.events.size()));
}
BENCHMARK(BM_Verify)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
