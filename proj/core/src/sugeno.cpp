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

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "fslouvain/error.hpp"

namespace fsl {
namespace {

// log of prod(1 + lambda*mu_i) - log(1 + lambda). Same sign as the product
// form but free of cancellation near lambda = 0.
double log_gap(std::span<const double> densities, double lambda) {
  double s = 0.0;
  for (double mu : densities) s += std::log1p(lambda * mu);
  return s - std::log1p(lambda);
}

double product_gap(std::span<const double> densities, double lambda) {
  double prod = 1.0;
  for (double mu : densities) prod *= 1.0 + lambda * mu;
  return prod - 1.0 - lambda;
}

void check_p(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(Errc::kInvalidArgument,
                "p must lie in (0, 1], got " + std::to_string(p));
  }
}

}  // namespace

double solve_lambda(std::span<const double> densities) {
  const double total = std::accumulate(densities.begin(), densities.end(), 0.0);
  if (std::abs(total - 1.0) <= 1e-12) return 0.0;
  if (total > 1.0) {
    // Densities summing above one give a root in (-1, 0); never produced by
    // p <= 1, so it is treated as a degenerate input.
    throw Error(Errc::kRootNotFound, "densities sum above one");
  }

  double lo = 1e-12;
  if (!(log_gap(densities, lo) < 0.0)) {
    throw Error(Errc::kRootNotFound,
                "cannot bracket lambda: densities are numerically additive");
  }
  double hi = 1.0;
  while (log_gap(densities, hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi) || hi > 1e300) {
      throw Error(Errc::kRootNotFound, "lambda bracket expansion diverged");
    }
  }

  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (log_gap(densities, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Newton polish on the product form, kept inside the bracket.
  double lambda = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double prod = 1.0;
    double dprod = 0.0;
    for (double mu : densities) {
      const double f = 1.0 + lambda * mu;
      dprod = dprod * f + prod * mu;
      prod *= f;
    }
    const double g = prod - 1.0 - lambda;
    const double dg = dprod - 1.0;
    if (g == 0.0 || dg == 0.0) break;
    const double next = lambda - g / dg;
    if (!(next >= lo && next <= hi)) break;
    if (next == lambda) break;
    lambda = next;
  }
  return lambda;
}

SugenoLambdaMeasure SugenoLambdaMeasure::from_densities(
    std::vector<double> densities, double p) {
  check_p(p);
  if (densities.size() < 2) {
    throw Error(Errc::kInvalidArgument, "a measure needs at least two nodes");
  }
  for (std::size_t i = 0; i < densities.size(); ++i) {
    if (!(densities[i] > 0.0)) {
      throw Error(Errc::kNonPositiveDensity,
                  "density of node " + std::to_string(i) + " is not positive");
    }
  }
  const double lambda = p == 1.0 ? 0.0 : solve_lambda(densities);
  return SugenoLambdaMeasure(std::move(densities), lambda, p);
}

SugenoLambdaMeasure SugenoLambdaMeasure::from_defuzzified(
    std::span<const double> values, double p) {
  check_p(p);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw Error(Errc::kNonPositiveDensity,
                  "defuzzified value of node " + std::to_string(i) +
                      " is not positive");
    }
  }
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  std::vector<double> densities(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    densities[i] = p * values[i] / total;
  }
  return from_densities(std::move(densities), p);
}

double SugenoLambdaMeasure::residual() const {
  return std::abs(product_gap(densities_, lambda_));
}

double SugenoLambdaMeasure::value(std::span<const std::size_t> coalition) const {
  if (lambda_ == 0.0) {
    double s = 0.0;
    for (std::size_t i : coalition) s += densities_.at(i);
    return s;
  }
  double prod = 1.0;
  for (std::size_t i : coalition) prod *= 1.0 + lambda_ * densities_.at(i);
  return (prod - 1.0) / lambda_;
}

double SugenoLambdaMeasure::value_of_mask(std::uint64_t mask) const {
  double s = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) {
      s += densities_.at(i);
      prod *= 1.0 + lambda_ * densities_[i];
    }
  }
  return lambda_ == 0.0 ? s : (prod - 1.0) / lambda_;
}

SugenoLambdaMeasure build_measure(std::span<const TrapezoidalFuzzySet> vector,
                                  double p, Defuzzifier method) {
  const std::vector<double> values = defuzzify_all(vector, method);
  return SugenoLambdaMeasure::from_defuzzified(values, p);
}

double coalition_value(const SugenoLambdaMeasure& m,
                       std::span<const std::size_t> coalition) {
  return m.value(coalition);
}

std::vector<double> shapley_exact(const SugenoLambdaMeasure& m,
                                  std::span<const std::size_t> ground) {
  const std::size_t g = ground.size();
  if (g > kMaxExactShapleyPlayers) {
    throw Error(Errc::kGroundSetTooLarge,
                "exact Shapley limited to " +
                    std::to_string(kMaxExactShapleyPlayers) + " players, got " +
                    std::to_string(g));
  }
  for (std::size_t i : ground) {
    if (i >= m.size()) {
      throw Error(Errc::kInvalidArgument, "ground set node out of range");
    }
  }
  if (g == 0) return {};

  // Coalition values over local indices, built incrementally by peeling the
  // lowest set bit.
  const std::size_t subsets = std::size_t{1} << g;
  std::vector<double> value(subsets);
  const double lambda = m.lambda();
  if (lambda == 0.0) {
    value[0] = 0.0;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      value[mask] = value[mask & (mask - 1)] + m.density(ground[low]);
    }
  } else {
    std::vector<double> prod(subsets);
    prod[0] = 1.0;
    value[0] = 0.0;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      prod[mask] =
          prod[mask & (mask - 1)] * (1.0 + lambda * m.density(ground[low]));
      value[mask] = (prod[mask] - 1.0) / lambda;
    }
  }

  // weight[s] = s! (g - s - 1)! / g!
  std::vector<double> weight(g);
  for (std::size_t s = 0; s < g; ++s) {
    double w = 1.0 / static_cast<double>(g);
    // 1 / C(g-1, s)
    for (std::size_t k = 1; k <= s; ++k) {
      w *= static_cast<double>(k) / static_cast<double>(g - k);
    }
    weight[s] = w;
  }

  std::vector<double> sh(g, 0.0);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size == g) continue;
    const double w = weight[size];
    const double base = value[mask];
    for (std::size_t i = 0; i < g; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (mask & bit) continue;
      sh[i] += w * (value[mask | bit] - base);
    }
  }
  return sh;
}

double shapley_additive(std::span<const double> values, std::size_t i,
                        std::optional<std::size_t> excluded) {
  if (i >= values.size() || (excluded && *excluded >= values.size())) {
    throw Error(Errc::kInvalidArgument, "node index out of range");
  }
  if (excluded && *excluded == i) {
    throw Error(Errc::kInvalidArgument, "excluded node equals queried node");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (excluded && k == *excluded) continue;
    total += values[k];
  }
  return values[i] / total;
}

}  // namespace fsl
