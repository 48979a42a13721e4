// Copyright 2026 The conflictnet Authors
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


// Serial reference paths against the OpenMP kernels. Pass
// --benchmark_filter to pick one family; set OMP_NUM_THREADS to vary width.

#include <benchmark/benchmark.h>

#include "conflictnet/analysis.h"
#include "conflictnet/examples.h"
#include "conflictnet/general_solver.h"

namespace conflictnet {
namespace {

Execution ExecFor(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

SemiSymmetricStructure SimplexWith(const ProductionFunction& pf) {
  ExampleOverrides o;
  o.production = pf;
  return *CheckSemiSymmetry(MakeSimplex(o)).structure;
}

void BM_NeutralityCheck(benchmark::State& state) {
  const auto ss = SimplexWith(ProductionFunction::Ratio(1.0));
  const auto grid = RandomValuationGrid(3, 2000, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(NeutralityCheck(ss, grid, {}, ExecFor(state)));
  }
  state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_NeutralityCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const auto pf = ProductionFunction::Ratio(1.0);
  const auto net = ConflictNetwork::Create(
      {1, 2, 3},
      {{"a", {1, 2}, 2.0, pf}, {"b", {2, 3}, 1.0, pf}, {"c", {1, 3}, 3.0, pf}},
      CostFunction::Quadratic());
  BruteForceConfig cfg;
  cfg.grid = {0.0, 1.5, 7};
  cfg.execution = ExecFor(state);
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceNash(net, cfg));
}
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteForceReference(benchmark::State& state) {
  const auto net = MakeDuel();
  BruteForceConfig cfg;
  cfg.grid = {0.0, 1.0, 101};
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteForceNashReference(net, cfg));
  }
}
BENCHMARK(BM_BruteForceReference)->Unit(benchmark::kMillisecond);

void BM_BruteForceDuel(benchmark::State& state) {
  const auto net = MakeDuel();
  BruteForceConfig cfg;
  cfg.grid = {0.0, 1.0, 101};
  cfg.execution = ExecFor(state);
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceNash(net, cfg));
}
BENCHMARK(BM_BruteForceDuel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Iterative(benchmark::State& state) {
  ExampleOverrides o;
  o.production = ProductionFunction::Cara(1.0);
  const auto net = MakeSimplex(o);
  IterationConfig cfg;
  cfg.execution = ExecFor(state);
  for (auto _ : state) benchmark::DoNotOptimize(SolveNashIterative(net, cfg));
}
BENCHMARK(BM_Iterative)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SemiSymmetric(benchmark::State& state) {
  const auto ss = SimplexWith(ProductionFunction::Cara(1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveDe(ss));
    benchmark::DoNotOptimize(SolveUe(ss));
  }
}
BENCHMARK(BM_SemiSymmetric)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace conflictnet

BENCHMARK_MAIN();
