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

#include "fslouvain/louvain.hpp"

#include <limits>
#include <string>

#include "fslouvain/error.hpp"
#include "fslouvain/random.hpp"
#include "fslouvain/sugeno.hpp"

namespace fsl {

double modularity(const WeightedGraph& g, const Partition& p) {
  if (p.size() != g.size()) {
    throw Error(Errc::kDimensionMismatch, "partition and graph sizes differ");
  }
  const double two_m = g.total_weight();
  if (!(two_m > 0.0)) {
    throw Error(Errc::kEmptyGraph, "modularity undefined for zero total weight");
  }
  const std::size_t k = p.community_count();
  std::vector<double> inside(k, 0.0);
  std::vector<double> total(k, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::size_t c = p.community_of(i);
    const auto row = g.row(i);
    double in = 0.0;
    for (std::size_t j : p.communities()[c]) in += row[j];
    inside[c] += in;
    total[c] += g.degree(i);
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    q += inside[c] / two_m - (total[c] / two_m) * (total[c] / two_m);
  }
  return q;
}

LocalMoving::LocalMoving(const WeightedGraph& a, const WeightedGraph& m)
    : a_(&a),
      m_(&m),
      community_(m.size()),
      total_(m.size()),
      two_m_(m.total_weight()),
      links_(m.size(), 0.0) {
  if (a.size() != m.size()) {
    throw Error(Errc::kDimensionMismatch,
                "A and M must have the same node set");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    community_[i] = i;
    total_[i] = m.degree(i);
  }
}

double LocalMoving::delta_q(std::size_t node, std::size_t target) const {
  const std::size_t own = community_[node];
  if (target == own) return 0.0;
  const auto row = m_->row(node);
  double to_target = 0.0;
  double to_own = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j == node) continue;
    if (community_[j] == target) {
      to_target += row[j];
    } else if (community_[j] == own) {
      to_own += row[j];
    }
  }
  const double k = m_->degree(node);
  const double own_rest = total_[own] - k;
  return 2.0 * (to_target - to_own) / two_m_ -
         2.0 * k * (total_[target] - own_rest) / (two_m_ * two_m_);
}

void LocalMoving::move(std::size_t node, std::size_t target) {
  const double k = m_->degree(node);
  total_[community_[node]] -= k;
  total_[target] += k;
  community_[node] = target;
}

std::size_t LocalMoving::sweep(std::span<const std::size_t> order,
                               double min_gain) {
  std::size_t moves = 0;
  const std::size_t n = size();
  for (std::size_t node : order) {
    const auto arow = a_->row(node);
    candidates_.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != node && arow[j] > 0.0) candidates_.push_back(community_[j]);
    }
    if (candidates_.empty()) continue;

    const auto mrow = m_->row(node);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != node) links_[community_[j]] += mrow[j];
    }

    const std::size_t own = community_[node];
    const double k = m_->degree(node);
    const double own_rest = total_[own] - k;
    const double to_own = links_[own];
    std::size_t best = own;
    double best_gain = 0.0;
    for (std::size_t c : candidates_) {
      if (c == own) continue;
      const double gain = 2.0 * (links_[c] - to_own) / two_m_ -
                          2.0 * k * (total_[c] - own_rest) / (two_m_ * two_m_);
      if (gain > best_gain || (gain == best_gain && best != own && c < best)) {
        best_gain = gain;
        best = c;
      }
    }

    for (std::size_t j = 0; j < n; ++j) links_[community_[j]] = 0.0;

    if (best != own && best_gain > min_gain) {
      move(node, best);
      ++moves;
    }
  }
  return moves;
}

double LocalMoving::modularity() const {
  return fsl::modularity(*m_, partition());
}

Partition LocalMoving::partition() const { return Partition(community_); }

DuoLouvainResult duo_louvain(const WeightedGraph& a, const WeightedGraph& m,
                             const DuoLouvainOptions& options) {
  if (a.size() != m.size()) {
    throw Error(Errc::kDimensionMismatch,
                "A has " + std::to_string(a.size()) + " nodes, M has " +
                    std::to_string(m.size()));
  }
  if (!(m.total_weight() > 0.0)) {
    throw Error(Errc::kEmptyGraph, "M has zero total weight");
  }

  DuoLouvainResult result;
  Rng rng(options.seed);
  std::vector<std::size_t> flat(m.size());
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = i;

  WeightedGraph level_a = a;
  WeightedGraph level_m = m;
  while (true) {
    LocalMoving state(level_a, level_m);
    std::vector<std::size_t> order = rng.permutation(state.size());
    for (std::size_t pass = 0; pass < options.max_passes_per_level; ++pass) {
      if (options.reshuffle_each_pass && pass > 0) {
        order = rng.permutation(state.size());
      }
      const std::size_t moves = state.sweep(order, options.min_gain);
      result.pass_modularity.push_back(state.modularity());
      if (moves == 0) break;
    }
    ++result.levels;

    const Partition level = state.partition();
    for (std::size_t& c : flat) c = level.community_of(c);
    if (level.community_count() == level_m.size()) break;
    level_a = contract(level_a, level);
    level_m = contract(level_m, level);
  }

  result.partition = Partition(flat);
  result.modularity = modularity(m, result.partition);
  return result;
}

namespace {

SugenoLouvainResult finish(const WeightedGraph& a,
                           std::vector<WeightedGraph> per_characteristic,
                           const SugenoLouvainOptions& options) {
  SugenoLouvainResult out;
  out.synergy = aggregate_matrices(per_characteristic, options.aggregator);
  out.combined = combine(a, out.synergy, options.gamma);
  out.louvain = duo_louvain(a, out.combined, options.louvain);
  return out;
}

}  // namespace

SugenoLouvainResult md_sugeno_louvain(const WeightedGraph& a,
                                      std::span<const std::vector<double>> values,
                                      std::span<const double> ps,
                                      const SugenoLouvainOptions& options) {
  if (values.empty()) {
    throw Error(Errc::kInvalidArgument, "at least one vector is required");
  }
  if (ps.size() != values.size()) {
    throw Error(Errc::kDimensionMismatch,
                std::to_string(values.size()) + " vectors but " +
                    std::to_string(ps.size()) + " p values");
  }
  std::vector<WeightedGraph> mats;
  mats.reserve(values.size());
  for (std::size_t l = 0; l < values.size(); ++l) {
    if (values[l].size() != a.size()) {
      throw Error(Errc::kDimensionMismatch,
                  "vector length " + std::to_string(values[l].size()) +
                      " differs from graph order " + std::to_string(a.size()));
    }
    if (ps[l] == 1.0 && a.size() > kMaxExactShapleyPlayers) {
      mats.push_back(synergy_matrix_additive(values[l], options.phi));
    } else {
      const SugenoLambdaMeasure measure =
          SugenoLambdaMeasure::from_defuzzified(values[l], ps[l]);
      mats.push_back(synergy_matrix_general(measure, options.phi));
    }
  }
  return finish(a, std::move(mats), options);
}

SugenoLouvainResult md_fuzzy_sugeno_louvain(const Mefvfg& g,
                                            const SugenoLouvainOptions& options) {
  g.validate();
  std::vector<std::vector<double>> values;
  values.reserve(g.vectors.size());
  for (const FuzzyVector& v : g.vectors) {
    values.push_back(defuzzify_all(v, options.defuzzifier));
  }
  return md_sugeno_louvain(g.graph, values, g.ps, options);
}

SugenoLouvainResult md_additive_sugeno_louvain(
    const WeightedGraph& a, std::span<const std::vector<double>> values,
    const SugenoLouvainOptions& options) {
  if (values.empty()) {
    throw Error(Errc::kInvalidArgument, "at least one vector is required");
  }
  std::vector<WeightedGraph> mats;
  mats.reserve(values.size());
  for (const std::vector<double>& v : values) {
    if (v.size() != a.size()) {
      throw Error(Errc::kDimensionMismatch,
                  "vector length " + std::to_string(v.size()) +
                      " differs from graph order " + std::to_string(a.size()));
    }
    mats.push_back(synergy_matrix_additive(v, options.phi));
  }
  return finish(a, std::move(mats), options);
}

}  // namespace fsl
