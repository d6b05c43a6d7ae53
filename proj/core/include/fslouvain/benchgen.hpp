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

#ifndef FSLOUVAIN_BENCHGEN_HPP_
#define FSLOUVAIN_BENCHGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fslouvain/graph.hpp"
#include "fslouvain/random.hpp"

namespace fsl {

// Edge probabilities of the planted-partition adjacency: alpha inside a
// block, beta across blocks.
struct NetworkParams {
  double alpha;
  double beta;
};

// Shapes of the low ([0, b], flat on [0, a]) and high ([c, 1], flat on
// [d, 1]) trapezoidal densities.
struct CaseParams {
  double a;
  double b;
  double c;
  double d;
};

inline constexpr int kNetworkCount = 9;
inline constexpr int kCaseCount = 9;

// Networks 1..9; throws Error(kInvalidArgument) otherwise.
NetworkParams network_params(int network);
// Cases 1..9; throws Error(kInvalidArgument) otherwise.
CaseParams case_params(int case_id);

struct BenchmarkSpec {
  int model = 0;    // 0 when not built from a preset
  int network = 0;  // 0 when alpha/beta were given directly
  int case_id = 0;  // 0 when a..d were given directly
  std::size_t n = 256;
  std::vector<std::size_t> adjacency_sizes;
  std::vector<std::size_t> synergy_sizes;
  NetworkParams edges{0.0, 0.0};
  CaseParams shape{0.0, 0.1, 0.9, 1.0};
  std::uint64_t seed = 0;

  // Throws Error(kInvalidArgument) when sizes do not sum to n, probabilities
  // leave [0, 1], or the shapes violate 0 <= a < b < c < d <= 1.
  void validate() const;
};

// Community sizes of models 1..4 (n = 256); parameters are left at their
// defaults. Throws Error(kUnknownModel) for other ids.
BenchmarkSpec model_preset(int model);

// Preset plus the network and case columns and a seed.
BenchmarkSpec make_spec(int model, int network, int case_id, std::uint64_t seed);

// Binary symmetric adjacency without self-loops; every unordered pair is
// drawn once, in row-major order over i < j.
WeightedGraph generate_adjacency(std::span<const std::size_t> sizes,
                                 NetworkParams edges, Rng& rng);

// Inverse CDFs of the low and high densities at probability u in [0, 1].
double low_inverse_cdf(double a, double b, double u);
double high_inverse_cdf(double c, double d, double u);
// Matching CDFs.
double low_cdf(double a, double b, double x);
double high_cdf(double c, double d, double x);

double sample_low(double a, double b, Rng& rng);
double sample_high(double c, double d, Rng& rng);

// r x n defuzzified values: row l is high on the nodes of block l and low
// elsewhere. Drawn row by row, node by node.
std::vector<std::vector<double>> generate_vectors(
    std::span<const std::size_t> sizes, const CaseParams& shape, Rng& rng);

// Benchmark synergy matrix: per row the 1-additive Shapley ratios, per pair
// the min of absolute marginal differences, then the element-wise max across
// rows.
WeightedGraph build_benchmark_F(const std::vector<std::vector<double>>& vectors);
WeightedGraph build_benchmark_F(std::span<const std::size_t> sizes,
                                const CaseParams& shape, Rng& rng);

struct BenchmarkInstance {
  BenchmarkSpec spec;
  WeightedGraph adjacency;
  std::vector<std::vector<double>> vectors;
  Partition truth_adjacency;
  Partition truth_synergy;
};

// Adjacency first, then vectors, both from Rng(spec.seed).
BenchmarkInstance generate_instance(const BenchmarkSpec& spec);

}  // namespace fsl

#endif  // FSLOUVAIN_BENCHGEN_HPP_
