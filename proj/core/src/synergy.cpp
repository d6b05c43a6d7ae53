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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fslouvain/error.hpp"

namespace fsl {

double aggregate(Aggregator op, double x, double y) {
  switch (op) {
    case Aggregator::kMin: return std::min(x, y);
    case Aggregator::kMax: return std::max(x, y);
    case Aggregator::kMean: return 0.5 * (x + y);
  }
  return 0.0;
}

std::string_view aggregator_name(Aggregator op) {
  switch (op) {
    case Aggregator::kMin: return "min";
    case Aggregator::kMax: return "max";
    case Aggregator::kMean: return "mean";
  }
  return "?";
}

std::optional<Aggregator> parse_aggregator(std::string_view name) {
  if (name == "min") return Aggregator::kMin;
  if (name == "max") return Aggregator::kMax;
  if (name == "mean") return Aggregator::kMean;
  return std::nullopt;
}

WeightedGraph synergy_matrix_additive(std::span<const double> values,
                                      Aggregator phi) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw Error(Errc::kInvalidArgument, "synergy matrix needs at least two nodes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw Error(Errc::kNonPositiveDensity,
                  "defuzzified value of node " + std::to_string(i) +
                      " is not positive");
    }
  }
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  std::vector<double> share(n);
  for (std::size_t i = 0; i < n; ++i) share[i] = values[i] / total;

  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Removing one player from an additive game renormalizes the others.
      const double sh_i_without_j = values[i] / (total - values[j]);
      const double sh_j_without_i = values[j] / (total - values[i]);
      const double f = aggregate(phi, std::abs(share[i] - sh_i_without_j),
                                 std::abs(share[j] - sh_j_without_i));
      w[i * n + j] = f;
      w[j * n + i] = f;
    }
  }
  return WeightedGraph(n, std::move(w));
}

WeightedGraph synergy_matrix_general(const SugenoLambdaMeasure& m,
                                     Aggregator phi) {
  const std::size_t n = m.size();
  if (n > kMaxExactShapleyPlayers) {
    throw Error(Errc::kGroundSetTooLarge,
                "general synergy matrix needs exact Shapley values; n = " +
                    std::to_string(n));
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const std::vector<double> sh = shapley_exact(m, all);

  // without[j][i]: Shapley value of i once j has left the ground set.
  std::vector<std::vector<double>> without(n, std::vector<double>(n, 0.0));
  const auto mu = m.densities();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> rest;
    std::vector<std::size_t> ids;
    double rest_total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      rest_total += mu[k];
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      rest.push_back(m.p() * mu[k] / rest_total);
      ids.push_back(k);
    }
    if (rest.size() == 1) {
      // A single remaining player holds the whole (normalized) game.
      without[j][ids[0]] = 1.0;
      continue;
    }
    const SugenoLambdaMeasure reduced =
        SugenoLambdaMeasure::from_densities(std::move(rest), m.p());
    std::vector<std::size_t> local(ids.size());
    std::iota(local.begin(), local.end(), std::size_t{0});
    const std::vector<double> sh_reduced = shapley_exact(reduced, local);
    for (std::size_t t = 0; t < ids.size(); ++t) {
      without[j][ids[t]] = sh_reduced[t];
    }
  }

  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double f = aggregate(phi, std::abs(sh[i] - without[j][i]),
                                 std::abs(sh[j] - without[i][j]));
      w[i * n + j] = f;
      w[j * n + i] = f;
    }
  }
  return WeightedGraph(n, std::move(w));
}

WeightedGraph aggregate_matrices(std::span<const WeightedGraph> mats,
                                 Aggregator op) {
  if (mats.empty()) {
    throw Error(Errc::kDimensionMismatch, "no matrices to aggregate");
  }
  const std::size_t n = mats.front().size();
  for (const WeightedGraph& g : mats) {
    if (g.size() != n) {
      throw Error(Errc::kDimensionMismatch,
                  "cannot aggregate matrices of order " + std::to_string(n) +
                      " and " + std::to_string(g.size()));
    }
  }
  if (mats.size() == 1) return mats.front();

  std::vector<double> w(mats.front().weights().begin(),
                        mats.front().weights().end());
  for (std::size_t l = 1; l < mats.size(); ++l) {
    const auto other = mats[l].weights();
    for (std::size_t e = 0; e < w.size(); ++e) {
      switch (op) {
        case Aggregator::kMin: w[e] = std::min(w[e], other[e]); break;
        case Aggregator::kMax: w[e] = std::max(w[e], other[e]); break;
        case Aggregator::kMean: w[e] += other[e]; break;
      }
    }
  }
  if (op == Aggregator::kMean) {
    const double r = static_cast<double>(mats.size());
    for (double& x : w) x /= r;
  }
  return WeightedGraph(n, std::move(w));
}

WeightedGraph combine(const WeightedGraph& a, const WeightedGraph& f,
                      double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(Errc::kGammaOutOfRange,
                "gamma must lie in [0, 1], got " + std::to_string(gamma));
  }
  if (a.size() != f.size()) {
    throw Error(Errc::kDimensionMismatch,
                "adjacency and synergy matrices differ in order");
  }
  if (gamma == 1.0) return a;
  if (gamma == 0.0) return f;
  const auto wa = a.weights();
  const auto wf = f.weights();
  std::vector<double> w(wa.size());
  for (std::size_t e = 0; e < w.size(); ++e) {
    w[e] = gamma * wa[e] + (1.0 - gamma) * wf[e];
  }
  return WeightedGraph(a.size(), std::move(w));
}

}  // namespace fsl
