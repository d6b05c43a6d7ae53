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

// Brute-force reference implementations used to check the library. They
// share no code with it beyond the data types.

#ifndef FSLOUVAIN_TESTS_ORACLES_HPP_
#define FSLOUVAIN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "fslouvain/graph.hpp"

namespace fsl::oracle {

// Centroid by the composite trapezoid rule on `steps` intervals.
inline double centroid(double a, double b, double c, double d,
                       std::size_t steps = 1000000) {
  auto eta = [&](double x) {
    if (x < a || x > d) return 0.0;
    if (x < b) return (x - a) / (b - a);
    if (x <= c) return 1.0;
    return (d - x) / (d - c);
  };
  const double h = (d - a) / static_cast<double>(steps);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double x = a + h * static_cast<double>(k);
    const double w = (k == 0 || k == steps) ? 0.5 : 1.0;
    num += w * x * eta(x);
    den += w * eta(x);
  }
  return num / den;
}

// μ(S) from the product form (Π(1+λμ_i) − 1)/λ, or the plain sum at λ = 0.
inline double measure(const std::vector<double>& mu, double lambda,
                      std::uint64_t mask) {
  if (lambda == 0.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (mask >> i & 1) s += mu[i];
    }
    return s;
  }
  double prod = 1.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mask >> i & 1) prod *= 1.0 + lambda * mu[i];
  }
  return (prod - 1.0) / lambda;
}

// λ > 0 solving Π(1+λμ_i) = 1+λ by plain bisection; 0 when Σμ = 1.
inline double lambda(const std::vector<double>& mu) {
  const double sum = std::accumulate(mu.begin(), mu.end(), 0.0);
  if (std::abs(sum - 1.0) < 1e-14) return 0.0;
  auto gap = [&](double l) {
    double prod = 1.0;
    for (double m : mu) prod *= 1.0 + l * m;
    return prod - 1.0 - l;
  };
  double lo = 1e-12, hi = 1.0;
  while (gap(hi) < 0.0) hi *= 2.0;
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Shapley values of `game` (a value per subset mask over n players) as the
// average marginal contribution over all n! orders.
inline std::vector<double> shapley_by_permutations(
    std::size_t n, const std::function<double(std::uint64_t)>& game) {
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < table.size(); ++s) table[s] = game(s);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> sh(n, 0.0);
  double count = 0.0;
  do {
    std::uint64_t mask = 0;
    for (std::size_t i : order) {
      const std::uint64_t next = mask | (std::uint64_t{1} << i);
      sh[i] += table[next] - table[mask];
      mask = next;
    }
    count += 1.0;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& v : sh) v /= count;
  return sh;
}

// Q = (1/2m) Σ_ij [w_ij − k_i k_j / 2m] δ(c_i, c_j), straight from the
// definition.
inline double modularity(const WeightedGraph& g,
                         const std::vector<std::size_t>& labels) {
  const std::size_t n = g.size();
  double two_m = 0.0;
  std::vector<double> k(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k[i] += g.weight(i, j);
    two_m += k[i];
  }
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[i] == labels[j]) q += g.weight(i, j) - k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

// Calls `visit` once per set partition of n nodes, as a restricted growth
// string.
inline void for_each_partition(
    std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> labels(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t used) {
    if (i == n) {
      visit(labels);
      return;
    }
    for (std::size_t c = 0; c <= used; ++c) {
      labels[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) return;
  labels[0] = 0;
  rec(1, 1);
}

// Analytic CDFs of the benchmark distributions on [0, b] and [c, 1].
inline double low_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= b) return 1.0;
  if (x <= a) return 2.0 * x / (a + b);
  return 2.0 * a / (a + b) +
         ((x - b) * (x - b) - (a - b) * (a - b)) / ((a + b) * (a - b));
}

inline double high_cdf(double c, double d, double x) {
  const double tail = (1.0 - d) + (1.0 - c);
  if (x <= c) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x <= d) return (x - c) * (x - c) / (tail * (d - c));
  return ((x - d) + (x - c)) / tail;
}

// Two-sided Kolmogorov-Smirnov statistic of `draws` against `cdf`.
inline double ks_statistic(std::vector<double> draws,
                           const std::function<double(double)>& cdf) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = cdf(draws[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f,
                  f - static_cast<double>(i) / n});
  }
  return d;
}

// NMI from joint counts, natural log.
inline double nmi(const std::vector<std::size_t>& x,
                  const std::vector<std::size_t>& y) {
  const double n = static_cast<double>(x.size());
  const std::size_t kx = *std::max_element(x.begin(), x.end()) + 1;
  const std::size_t ky = *std::max_element(y.begin(), y.end()) + 1;
  std::vector<double> px(kx, 0.0), py(ky, 0.0), pxy(kx * ky, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    px[x[i]] += 1.0 / n;
    py[y[i]] += 1.0 / n;
    pxy[x[i] * ky + y[i]] += 1.0 / n;
  }
  double hx = 0.0, hy = 0.0, mi = 0.0;
  for (double p : px) if (p > 0) hx -= p * std::log(p);
  for (double p : py) if (p > 0) hy -= p * std::log(p);
  for (std::size_t i = 0; i < kx; ++i) {
    for (std::size_t j = 0; j < ky; ++j) {
      const double p = pxy[i * ky + j];
      if (p > 0) mi += p * std::log(p / (px[i] * py[j]));
    }
  }
  if (hx + hy == 0.0) return 1.0;
  return 2.0 * mi / (hx + hy);
}

}  // namespace fsl::oracle

#endif  // FSLOUVAIN_TESTS_ORACLES_HPP_
