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

#include "fslouvain/synergy.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fslouvain/error.hpp"
#include "fslouvain/sugeno.hpp"
#include "oracles.hpp"

namespace fsl {
namespace {

std::vector<double> random_values(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(0.1, 10.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(gen);
  return v;
}

WeightedGraph constant(std::size_t n, double c) {
  std::vector<double> w(n * n, c);
  for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 0.0;
  return WeightedGraph(n, w);
}

// F from Shapley values computed by permutation enumeration; Sh_i^j uses the
// measure rebuilt on the remaining nodes with the same p.
WeightedGraph oracle_synergy(const std::vector<double>& values, double p) {
  const std::size_t n = values.size();
  double total = 0.0;
  for (double v : values) total += v;
  std::vector<double> mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = p * values[i] / total;
  const double lam = oracle::lambda(mu);
  const auto sh = oracle::shapley_by_permutations(
      n, [&](std::uint64_t s) { return oracle::measure(mu, lam, s); });
  std::vector<std::vector<double>> without(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> rest;
    double rest_total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) rest_total += mu[k];
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) rest.push_back(p * mu[k] / rest_total);
    }
    const double lj = oracle::lambda(rest);
    without[j] = oracle::shapley_by_permutations(
        n - 1, [&](std::uint64_t s) { return oracle::measure(rest, lj, s); });
  }
  auto sh_without = [&](std::size_t i, std::size_t j) {
    return without[j][i < j ? i : i - 1];
  };
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      w[i * n + j] = std::min(std::abs(sh[i] - sh_without(i, j)),
                              std::abs(sh[j] - sh_without(j, i)));
    }
  }
  return WeightedGraph(n, w);
}

void expect_near(const WeightedGraph& x, const WeightedGraph& y, double tol) {
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      ASSERT_NEAR(x.weight(i, j), y.weight(i, j), tol) << i << "," << j;
    }
  }
}

TEST(Aggregate, Operators) {
  EXPECT_EQ(aggregate(Aggregator::kMin, 1, 2), 1.0);
  EXPECT_EQ(aggregate(Aggregator::kMax, 1, 2), 2.0);
  EXPECT_EQ(aggregate(Aggregator::kMean, 1, 2), 1.5);
  EXPECT_EQ(parse_aggregator("mean"), Aggregator::kMean);
  EXPECT_FALSE(parse_aggregator("median").has_value());
  EXPECT_EQ(aggregator_name(Aggregator::kMax), "max");
}

TEST(SynergyAdditive, ThreeNodeExample) {
  const std::vector<double> d{2, 1, 1};
  const WeightedGraph f = synergy_matrix_additive(d);
  EXPECT_NEAR(f.weight(0, 2), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(f.weight(2, 0), 1.0 / 6.0, 1e-15);
  EXPECT_EQ(f.weight(0, 0), 0.0);
}

TEST(SynergyAdditive, TwoNodes) {
  const std::vector<double> d{1, 1};
  EXPECT_NEAR(synergy_matrix_additive(d).weight(0, 1), 0.5, 1e-15);
}

TEST(SynergyAdditive, UniformValuesGiveConstantMatrix) {
  const std::vector<double> d(7, 3.5);
  const WeightedGraph f = synergy_matrix_additive(d);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      if (i != j) {
        EXPECT_NEAR(f.weight(i, j), f.weight(0, 1), 1e-15);
      }
    }
  }
}

TEST(SynergyAdditive, OperatorsAndErrors) {
  const std::vector<double> d{2, 1, 1};
  // |Sh_1 − Sh_1^3| = 1/6, |Sh_3 − Sh_3^1| = 1/4.
  EXPECT_NEAR(synergy_matrix_additive(d, Aggregator::kMax).weight(0, 2), 0.25, 1e-15);
  EXPECT_NEAR(synergy_matrix_additive(d, Aggregator::kMean).weight(0, 2),
              5.0 / 24.0, 1e-15);
  const std::vector<double> one{1};
  EXPECT_THROW(synergy_matrix_additive(one), Error);
  const std::vector<double> zero{1, 0};
  EXPECT_THROW(synergy_matrix_additive(zero), Error);
}

TEST(SynergyGeneral, EqualsAdditiveAtPOne) {
  std::mt19937_64 gen(31);
  for (int t = 0; t < 20; ++t) {
    const auto v = random_values(gen, 2 + gen() % 10);
    const auto m = SugenoLambdaMeasure::from_defuzzified(v, 1.0);
    for (auto phi : {Aggregator::kMin, Aggregator::kMax, Aggregator::kMean}) {
      expect_near(synergy_matrix_general(m, phi), synergy_matrix_additive(v, phi),
                  1e-9);
    }
  }
}

TEST(SynergyGeneral, SymmetricMeasureGivesConstantMatrix) {
  const std::vector<double> v{2, 2, 2};
  const auto m = SugenoLambdaMeasure::from_defuzzified(v, 0.4);
  const WeightedGraph f = synergy_matrix_general(m);
  EXPECT_GT(f.weight(0, 1), 0.0);
  EXPECT_NEAR(f.weight(0, 2), f.weight(0, 1), 1e-12);
  EXPECT_NEAR(f.weight(1, 2), f.weight(0, 1), 1e-12);
}

TEST(SynergyGeneral, MatchesPermutationOracle) {
  std::mt19937_64 gen(32);
  for (double p : {0.5, 0.2, 0.9}) {
    const auto v = random_values(gen, 5);
    const auto m = SugenoLambdaMeasure::from_defuzzified(v, p);
    expect_near(synergy_matrix_general(m), oracle_synergy(v, p), 1e-9);
  }
}

TEST(SynergyGeneral, TooManyPlayers) {
  const std::vector<double> v(17, 1.0);
  const auto m = SugenoLambdaMeasure::from_defuzzified(v, 0.5);
  try {
    synergy_matrix_general(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kGroundSetTooLarge);
  }
}

TEST(AggregateMatrices, Examples) {
  const WeightedGraph x = constant(4, 0.2);
  const WeightedGraph y = constant(4, 0.4);
  const std::vector<WeightedGraph> one{x};
  EXPECT_EQ(aggregate_matrices(one), x);
  const std::vector<WeightedGraph> with_zero{WeightedGraph(4), y};
  EXPECT_EQ(aggregate_matrices(with_zero, Aggregator::kMax), y);
  const std::vector<WeightedGraph> pair{x, y};
  expect_near(aggregate_matrices(pair, Aggregator::kMean), constant(4, 0.3), 1e-15);
  EXPECT_EQ(aggregate_matrices(pair, Aggregator::kMin), x);
  const std::vector<WeightedGraph> mismatched{x, constant(3, 1.0)};
  EXPECT_THROW(aggregate_matrices(mismatched), Error);
  EXPECT_THROW(aggregate_matrices(std::vector<WeightedGraph>{}), Error);
}

TEST(Combine, Endpoints) {
  const WeightedGraph a = constant(3, 1.0);
  const WeightedGraph f = constant(3, 0.25);
  EXPECT_EQ(combine(a, f, 0.0), f);
  EXPECT_EQ(combine(a, f, 1.0), a);
  expect_near(combine(a, WeightedGraph(3), 0.5), constant(3, 0.5), 0.0);
  expect_near(combine(a, f, 0.25), constant(3, 0.25 + 0.75 * 0.25), 1e-15);
  try {
    combine(a, f, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kGammaOutOfRange);
  }
  EXPECT_THROW(combine(a, constant(4, 0.1), 0.5), Error);
}

}  // namespace
}  // namespace fsl
