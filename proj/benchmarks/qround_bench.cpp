// Copyright 2026 The qround Authors
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

#include "qround/blocks.hpp"
#include "qround/mult.hpp"
#include "qround/rounding.hpp"
#include "qround/sim.hpp"

namespace qround {
namespace {

void BM_BuildAdder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(add_registers(n));
}
BENCHMARK(BM_BuildAdder)->RangeMultiplier(2)->Range(8, 128);

void BM_BuildAddConstant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(add_constant(n, 1));
}
BENCHMARK(BM_BuildAddConstant)->RangeMultiplier(2)->Range(8, 64);

void BM_WalkMultiplier(benchmark::State& state) {
  const MultiplyPlan pl = plan(MultMethod::kExact, static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(method_resources(pl, Regime::kFT));
}
BENCHMARK(BM_WalkMultiplier)->DenseRange(4, 16, 4);

void BM_SimulateRounding(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ExtendedValue v(FxFormat::make(3, 1), m, (std::uint64_t{1} << (m + 3)) - 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_rounding(RoundingMethod::qr_comparator(), v));
  }
}
BENCHMARK(BM_SimulateRounding)->DenseRange(2, 4);

void BM_SampleSemantic(benchmark::State& state) {
  const ExtendedValue v = ExtendedValue::parse("01.01|1011");
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(RoundingMethod::qr_comparator(), v, n, 1, Backend::kSemantic));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SampleSemantic)->Arg(10000)->Arg(1000000);

}  // namespace
}  // namespace qround

BENCHMARK_MAIN();
