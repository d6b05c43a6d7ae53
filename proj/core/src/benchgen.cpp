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

#include "fslouvain/benchgen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "fslouvain/error.hpp"

namespace fsl {
namespace {

constexpr std::array<NetworkParams, kNetworkCount> kNetworks = {{
    {0.45, 0.016},
    {0.4, 0.033},
    {0.35, 0.05},
    {0.325, 0.058},
    {0.3, 0.066},
    {0.275, 0.075},
    {0.25, 0.083},
    {0.225, 0.091},
    {0.2, 0.1},
}};

constexpr std::array<CaseParams, kCaseCount> kCases = {{
    {0.0, 0.1, 0.9, 1.0},
    {0.0, 0.1, 0.8, 0.9},
    {0.0, 0.1, 0.7, 0.8},
    {0.1, 0.2, 0.9, 1.0},
    {0.1, 0.2, 0.8, 0.9},
    {0.1, 0.2, 0.7, 0.8},
    {0.2, 0.3, 0.9, 1.0},
    {0.2, 0.3, 0.8, 0.9},
    {0.2, 0.3, 0.7, 0.8},
}};

std::vector<std::size_t> block_of(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> block;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    block.insert(block.end(), sizes[c], c);
  }
  return block;
}

std::size_t sum(std::span<const std::size_t> sizes) {
  return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

}  // namespace

NetworkParams network_params(int network) {
  if (network < 1 || network > kNetworkCount) {
    throw Error(Errc::kInvalidArgument,
                "network must be in 1..9, got " + std::to_string(network));
  }
  return kNetworks[static_cast<std::size_t>(network - 1)];
}

CaseParams case_params(int case_id) {
  if (case_id < 1 || case_id > kCaseCount) {
    throw Error(Errc::kInvalidArgument,
                "case must be in 1..9, got " + std::to_string(case_id));
  }
  return kCases[static_cast<std::size_t>(case_id - 1)];
}

void BenchmarkSpec::validate() const {
  if (sum(adjacency_sizes) != n || sum(synergy_sizes) != n) {
    throw Error(Errc::kInvalidArgument,
                "community sizes must sum to n = " + std::to_string(n));
  }
  auto prob = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!prob(edges.alpha) || !prob(edges.beta)) {
    throw Error(Errc::kInvalidArgument, "alpha and beta must lie in [0, 1]");
  }
  const auto& s = shape;
  if (!(0.0 <= s.a && s.a < s.b && s.b < s.c && s.c < s.d && s.d <= 1.0)) {
    throw Error(Errc::kInvalidArgument,
                "shape must satisfy 0 <= a < b < c < d <= 1");
  }
}

BenchmarkSpec model_preset(int model) {
  BenchmarkSpec spec;
  spec.model = model;
  spec.n = 256;
  switch (model) {
    case 1:
      spec.adjacency_sizes = {128, 128};
      spec.synergy_sizes = {64, 64, 64, 64};
      break;
    case 2:
      spec.adjacency_sizes = {64, 64, 64, 64};
      spec.synergy_sizes = std::vector<std::size_t>(8, 32);
      break;
    case 3:
      spec.adjacency_sizes = {128, 128};
      spec.synergy_sizes = {43, 42, 43, 96, 32};
      break;
    case 4:
      spec.adjacency_sizes = {64, 64, 64, 64};
      spec.synergy_sizes = {24, 40, 64, 21, 22, 21, 32, 32};
      break;
    default:
      throw Error(Errc::kUnknownModel,
                  "model must be in 1..4, got " + std::to_string(model));
  }
  return spec;
}

BenchmarkSpec make_spec(int model, int network, int case_id,
                        std::uint64_t seed) {
  BenchmarkSpec spec = model_preset(model);
  spec.network = network;
  spec.case_id = case_id;
  spec.edges = network_params(network);
  spec.shape = case_params(case_id);
  spec.seed = seed;
  return spec;
}

WeightedGraph generate_adjacency(std::span<const std::size_t> sizes,
                                 NetworkParams edges, Rng& rng) {
  const std::vector<std::size_t> block = block_of(sizes);
  const std::size_t n = block.size();
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double prob = block[i] == block[j] ? edges.alpha : edges.beta;
      if (rng.uniform01() < prob) {
        w[i * n + j] = 1.0;
        w[j * n + i] = 1.0;
      }
    }
  }
  return WeightedGraph(n, std::move(w));
}

double low_inverse_cdf(double a, double b, double u) {
  const double knee = 2.0 * a / (a + b);
  if (u <= knee) return (a + b) * u / 2.0;
  const double radicand = (u - knee) * (a + b) * (a - b) + (a - b) * (a - b);
  return b - std::sqrt(std::max(radicand, 0.0));
}

double high_inverse_cdf(double c, double d, double u) {
  const double tail = (1.0 - c) + (1.0 - d);
  const double knee = (d - c) / tail;
  if (u <= knee) return c + std::sqrt(u * (d - c) * tail);
  return (u * tail + c + d) / 2.0;
}

double low_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= b) return 1.0;
  if (x <= a) return 2.0 * x / (a + b);
  return 2.0 * a / (a + b) +
         ((x - b) * (x - b) - (a - b) * (a - b)) / ((a + b) * (a - b));
}

double high_cdf(double c, double d, double x) {
  if (x <= c) return 0.0;
  if (x >= 1.0) return 1.0;
  const double tail = (1.0 - d) + (1.0 - c);
  if (x <= d) return (x - c) * (x - c) / (tail * (d - c));
  return ((x - d) + (x - c)) / tail;
}

double sample_low(double a, double b, Rng& rng) {
  // u in (0, 1] keeps draws strictly positive; the synergy needs D > 0.
  return low_inverse_cdf(a, b, 1.0 - rng.uniform01());
}

double sample_high(double c, double d, Rng& rng) {
  return high_inverse_cdf(c, d, rng.uniform01());
}

std::vector<std::vector<double>> generate_vectors(
    std::span<const std::size_t> sizes, const CaseParams& shape, Rng& rng) {
  const std::vector<std::size_t> block = block_of(sizes);
  std::vector<std::vector<double>> out(sizes.size(),
                                       std::vector<double>(block.size()));
  for (std::size_t l = 0; l < sizes.size(); ++l) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      out[l][i] = block[i] == l ? sample_high(shape.c, shape.d, rng)
                                : sample_low(shape.a, shape.b, rng);
    }
  }
  return out;
}

WeightedGraph build_benchmark_F(const std::vector<std::vector<double>>& vectors) {
  if (vectors.empty()) {
    throw Error(Errc::kInvalidArgument, "no vectors");
  }
  const std::size_t n = vectors.front().size();
  std::vector<double> f(n * n, 0.0);
  std::vector<double> share(n);
  std::vector<double> share_without(n * n);  // [j * n + i]: i's share once j left
  for (const std::vector<double>& row : vectors) {
    if (row.size() != n) {
      throw Error(Errc::kDimensionMismatch, "vectors differ in length");
    }
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) share[i] = row[i] / total;
    for (std::size_t j = 0; j < n; ++j) {
      const double rest = total - row[j];
      for (std::size_t i = 0; i < n; ++i) {
        share_without[j * n + i] = row[i] / rest;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = std::min(std::abs(share[i] - share_without[j * n + i]),
                                  std::abs(share[j] - share_without[i * n + j]));
        double& upper = f[i * n + j];
        upper = std::max(upper, v);
        f[j * n + i] = upper;
      }
    }
  }
  return WeightedGraph(n, std::move(f));
}

WeightedGraph build_benchmark_F(std::span<const std::size_t> sizes,
                                const CaseParams& shape, Rng& rng) {
  return build_benchmark_F(generate_vectors(sizes, shape, rng));
}

BenchmarkInstance generate_instance(const BenchmarkSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  BenchmarkInstance inst;
  inst.spec = spec;
  inst.adjacency = generate_adjacency(spec.adjacency_sizes, spec.edges, rng);
  inst.vectors = generate_vectors(spec.synergy_sizes, spec.shape, rng);
  inst.truth_adjacency = Partition::from_sizes(spec.adjacency_sizes);
  inst.truth_synergy = Partition::from_sizes(spec.synergy_sizes);
  return inst;
}

}  // namespace fsl
