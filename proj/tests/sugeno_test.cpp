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

#include "fslouvain/sugeno.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "fslouvain/error.hpp"
#include "oracles.hpp"

namespace fsl {
namespace {

std::vector<double> random_values(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 10.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(gen);
  return v;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

TEST(Measure, AdditiveDensities) {
  const std::vector<double> d{2, 1, 1};
  const auto m = SugenoLambdaMeasure::from_defuzzified(d, 1.0);
  EXPECT_EQ(m.lambda(), 0.0);
  EXPECT_DOUBLE_EQ(m.density(0), 0.5);
  EXPECT_DOUBLE_EQ(m.density(1), 0.25);
  EXPECT_DOUBLE_EQ(m.density(2), 0.25);

  const std::vector<double> flat{1, 1, 1, 1};
  const auto u = SugenoLambdaMeasure::from_defuzzified(flat, 1.0);
  EXPECT_EQ(u.lambda(), 0.0);
  for (double mu : u.densities()) EXPECT_DOUBLE_EQ(mu, 0.25);
}

TEST(Measure, TwoPlayerLambdaIsEight) {
  const std::vector<double> d{1, 1};
  const auto m = SugenoLambdaMeasure::from_defuzzified(d, 0.5);
  EXPECT_DOUBLE_EQ(m.density(0), 0.25);
  EXPECT_NEAR(m.lambda(), 8.0, 1e-9);
  EXPECT_LE(m.residual(), 1e-12);
}

TEST(Measure, RejectsBadInput) {
  const std::vector<double> one{1};
  EXPECT_THROW(SugenoLambdaMeasure::from_defuzzified(one, 0.5), Error);
  const std::vector<double> neg{1, -1};
  try {
    SugenoLambdaMeasure::from_defuzzified(neg, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNonPositiveDensity);
  }
  const std::vector<double> ok{1, 2};
  EXPECT_THROW(SugenoLambdaMeasure::from_defuzzified(ok, 0.0), Error);
  EXPECT_THROW(SugenoLambdaMeasure::from_defuzzified(ok, 1.5), Error);
}

TEST(Measure, BuildFromFuzzyVector) {
  const FuzzyVector f{TrapezoidalFuzzySet(30, 40, 60, 70),
                      TrapezoidalFuzzySet(30, 40, 60, 70)};
  const auto m = build_measure(f, 0.5);
  EXPECT_NEAR(m.lambda(), 8.0, 1e-9);
}

TEST(Measure, SolveLambdaRejectsSuperadditiveDensities) {
  const std::vector<double> d{0.6, 0.7};
  try {
    solve_lambda(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRootNotFound);
  }
}

TEST(Measure, ResidualSmallAcrossRandomInstances) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + gen() % 60;
    for (double p : {0.01, 0.3, 0.7, 0.99, 1.0}) {
      const auto m = SugenoLambdaMeasure::from_defuzzified(random_values(gen, n), p);
      ASSERT_LE(m.residual(), 1e-10) << "n=" << n << " p=" << p;
      ASSERT_GE(m.lambda(), 0.0);
    }
  }
}

TEST(CoalitionValue, Examples) {
  const std::vector<double> d{2, 1, 1};
  const auto add = SugenoLambdaMeasure::from_defuzzified(d, 1.0);
  const std::vector<std::size_t> s01{0, 1};
  EXPECT_DOUBLE_EQ(coalition_value(add, s01), 0.75);
  EXPECT_EQ(coalition_value(add, {}), 0.0);

  const std::vector<double> e{1, 1};
  const auto m = SugenoLambdaMeasure::from_defuzzified(e, 0.5);
  EXPECT_EQ(coalition_value(m, {}), 0.0);
  EXPECT_NEAR(coalition_value(m, s01), 1.0, 1e-9);
}

TEST(CoalitionValue, NormalizedAndMatchesProductForm) {
  std::mt19937_64 gen(8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + gen() % 12;
    for (double p : {0.3, 0.7, 1.0}) {
      const auto m = SugenoLambdaMeasure::from_defuzzified(random_values(gen, n), p);
      const auto all = iota_vec(n);
      ASSERT_NEAR(coalition_value(m, all), 1.0, 1e-9);
      ASSERT_EQ(coalition_value(m, {}), 0.0);
      const std::vector<double> mu(m.densities().begin(), m.densities().end());
      const std::uint64_t mask = gen() & ((std::uint64_t{1} << n) - 1);
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) s.push_back(i);
      }
      ASSERT_NEAR(coalition_value(m, s), oracle::measure(mu, m.lambda(), mask),
                  1e-12);
      ASSERT_NEAR(m.value_of_mask(mask), coalition_value(m, s), 1e-12);
    }
  }
}

TEST(CoalitionValue, MonotoneOnNestedChains) {
  std::mt19937_64 gen(13);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + gen() % 11;
    const double p = std::array{0.3, 0.7, 1.0}[t % 3];
    const auto m = SugenoLambdaMeasure::from_defuzzified(random_values(gen, n), p);
    auto order = iota_vec(n);
    std::shuffle(order.begin(), order.end(), gen);
    std::vector<std::size_t> s;
    double prev = coalition_value(m, s);
    for (std::size_t i : order) {
      s.push_back(i);
      const double next = coalition_value(m, s);
      ASSERT_LE(prev, next + 1e-15);
      prev = next;
    }
  }
}

TEST(ShapleyExact, AdditiveMeasureGivesDensities) {
  const std::vector<double> d{3, 1, 2, 5};
  const auto m = SugenoLambdaMeasure::from_defuzzified(d, 1.0);
  const auto sh = shapley_exact(m, iota_vec(4));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(sh[i], m.density(i), 1e-15);
}

TEST(ShapleyExact, SymmetricPair) {
  const std::vector<double> d{1, 1};
  const auto m = SugenoLambdaMeasure::from_defuzzified(d, 0.5);
  const auto sh = shapley_exact(m, iota_vec(2));
  EXPECT_NEAR(sh[0], 0.5, 1e-12);
  EXPECT_NEAR(sh[1], 0.5, 1e-12);
}

TEST(ShapleyExact, MatchesPermutationOracleOnSixNodes) {
  std::mt19937_64 gen(21);
  const auto m = SugenoLambdaMeasure::from_defuzzified(random_values(gen, 6), 0.4);
  const std::vector<double> mu(m.densities().begin(), m.densities().end());
  const auto expect = oracle::shapley_by_permutations(
      6, [&](std::uint64_t s) { return oracle::measure(mu, m.lambda(), s); });
  const auto got = shapley_exact(m, iota_vec(6));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(got[i], expect[i], 1e-9);
}

TEST(ShapleyExact, SubsetGroundUsesRestrictedGame) {
  std::mt19937_64 gen(22);
  const auto m = SugenoLambdaMeasure::from_defuzzified(random_values(gen, 7), 0.3);
  const std::vector<std::size_t> ground{1, 4, 5, 6};
  const std::vector<double> mu(m.densities().begin(), m.densities().end());
  const auto expect = oracle::shapley_by_permutations(4, [&](std::uint64_t s) {
    std::uint64_t full = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (s >> k & 1) full |= std::uint64_t{1} << ground[k];
    }
    return oracle::measure(mu, m.lambda(), full);
  });
  const auto got = shapley_exact(m, ground);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(got[k], expect[k], 1e-9);
}

TEST(ShapleyExact, EfficiencySumsToOne) {
  std::mt19937_64 gen(23);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + gen() % 15;
    const auto m = SugenoLambdaMeasure::from_defuzzified(random_values(gen, n), 0.2);
    const auto sh = shapley_exact(m, iota_vec(n));
    EXPECT_NEAR(std::accumulate(sh.begin(), sh.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(ShapleyExact, GroundSetCap) {
  std::mt19937_64 gen(24);
  const auto m = SugenoLambdaMeasure::from_defuzzified(random_values(gen, 17), 0.5);
  try {
    shapley_exact(m, iota_vec(17));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kGroundSetTooLarge);
  }
  EXPECT_EQ(shapley_exact(m, iota_vec(16)).size(), 16u);
  const std::vector<std::size_t> bad{0, 17};
  EXPECT_THROW(shapley_exact(m, bad), Error);
}

TEST(ShapleyAdditive, ClosedForm) {
  const std::vector<double> d{2, 1, 1};
  EXPECT_DOUBLE_EQ(shapley_additive(d, 0), 0.5);
  EXPECT_DOUBLE_EQ(shapley_additive(d, 0, 1), 2.0 / 3.0);
  const std::vector<double> e{5, 5};
  EXPECT_DOUBLE_EQ(shapley_additive(e, 0, 1), 1.0);
  EXPECT_THROW(shapley_additive(d, 0, 0), Error);
}

}  // namespace
}  // namespace fsl
