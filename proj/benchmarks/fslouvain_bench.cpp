// Copyright 2026 The fslouvain Authors.
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

#include <numeric>
#include <vector>

#include "fslouvain/benchgen.hpp"
#include "fslouvain/louvain.hpp"
#include "fslouvain/sugeno.hpp"
#include "fslouvain/synergy.hpp"

namespace {

using namespace fsl;

const BenchmarkInstance& model_one() {
  static const BenchmarkInstance inst = generate_instance(make_spec(1, 5, 5, 42));
  return inst;
}

void BM_BenchmarkF(benchmark::State& state) {
  const auto& inst = model_one();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_benchmark_F(inst.vectors));
  }
}
BENCHMARK(BM_BenchmarkF)->Unit(benchmark::kMillisecond);

void BM_SynergyAdditive(benchmark::State& state) {
  const auto& inst = model_one();
  for (auto _ : state) {
    std::vector<WeightedGraph> mats;
    for (const auto& row : inst.vectors) mats.push_back(synergy_matrix_additive(row));
    benchmark::DoNotOptimize(aggregate_matrices(mats, Aggregator::kMax));
  }
}
BENCHMARK(BM_SynergyAdditive)->Unit(benchmark::kMillisecond);

void BM_DuoLouvainModelOne(benchmark::State& state) {
  const auto& inst = model_one();
  const WeightedGraph f = build_benchmark_F(inst.vectors);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(duo_louvain(inst.adjacency, f, {.seed = seed++}));
  }
}
BENCHMARK(BM_DuoLouvainModelOne)->Unit(benchmark::kMillisecond);

void BM_ShapleyExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = 1.0 + static_cast<double>(i % 5);
  const auto m = SugenoLambdaMeasure::from_defuzzified(values, 0.5);
  std::vector<std::size_t> ground(n);
  std::iota(ground.begin(), ground.end(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shapley_exact(m, ground));
  }
}
BENCHMARK(BM_ShapleyExact)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_SynergyGeneral(benchmark::State& state) {
  std::vector<double> values(12);
  for (std::size_t i = 0; i < 12; ++i) values[i] = 1.0 + static_cast<double>(i % 5);
  const auto m = SugenoLambdaMeasure::from_defuzzified(values, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synergy_matrix_general(m));
  }
}
BENCHMARK(BM_SynergyGeneral)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
