// Copyright 2026 The ooa-gr Authors
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

// Serial reference kernels against the parallel ones.
//   bench_kernels --benchmark_filter=Coverage

#include <benchmark/benchmark.h>

#include "ooa/coverage.hpp"
#include "ooa/nets.hpp"

namespace {

using namespace ooa;

// Rootless polynomials whose generators the coverage benchmarks use, by (q, t).
GeneratorMatrix generator_for(int q, int t) {
  const auto polys = enumerate_polys(Field::make(q), t, PolyFilter::Rootless);
  return generator_matrix(polys.back());
}

void BM_CoverageReference(benchmark::State& state) {
  const GeneratorMatrix g = generator_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(count_covered_reference(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial(g.cols(), g.t())));
}

void BM_CoverageParallel(benchmark::State& state) {
  const GeneratorMatrix g = generator_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int jobs = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(count_covered(g, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial(g.cols(), g.t())));
}

PointSet net_for(int q, int t) {
  const auto polys = enumerate_polys(Field::make(q), t, PolyFilter::Rootless);
  return net_points(gr_construct(polys.front()));
}

void BM_DiscrepancyReference(benchmark::State& state) {
  const PointSet p = net_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(star_discrepancy_reference(p));
}

void BM_DiscrepancyParallel(benchmark::State& state) {
  const PointSet p = net_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int jobs = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(star_discrepancy(p, kDefaultDiscrepancyBudget, jobs));
}

BENCHMARK(BM_CoverageReference)->Args({2, 6})->Args({2, 8})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageParallel)
    ->Args({2, 6, 1})->Args({2, 8, 1})->Args({2, 8, 0})->Args({3, 4, 1})->Args({3, 4, 0})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscrepancyReference)->Args({2, 3})->Args({2, 4})->Args({3, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscrepancyParallel)
    ->Args({2, 3, 1})->Args({2, 4, 1})->Args({2, 4, 0})->Args({3, 2, 1})->Args({2, 5, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
