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

#ifndef FSLOUVAIN_LOUVAIN_HPP_
#define FSLOUVAIN_LOUVAIN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fslouvain/fuzzy.hpp"
#include "fslouvain/graph.hpp"
#include "fslouvain/synergy.hpp"

namespace fsl {

// Newman-Girvan modularity of `p` on the weighted graph `g`. Throws
// Error(kEmptyGraph) when the total weight is zero.
double modularity(const WeightedGraph& g, const Partition& p);

// Local-moving state of one Louvain level. Candidate communities for a node
// are those of its neighbours in `a`; gains are measured on `m`. Both graphs
// must outlive the state.
class LocalMoving {
 public:
  // Starts from singletons.
  LocalMoving(const WeightedGraph& a, const WeightedGraph& m);

  std::size_t size() const { return community_.size(); }
  std::size_t community_of(std::size_t node) const { return community_[node]; }

  // Modularity change on `m` if `node` leaves its community and joins
  // `target`. Zero when target is the current community.
  double delta_q(std::size_t node, std::size_t target) const;
  void move(std::size_t node, std::size_t target);

  // One pass over `order`. Each node joins the neighbour community with the
  // largest gain (smallest id on ties) when that gain exceeds `min_gain`.
  // Returns the number of moves made.
  std::size_t sweep(std::span<const std::size_t> order, double min_gain);

  double modularity() const;
  Partition partition() const;

 private:
  const WeightedGraph* a_;
  const WeightedGraph* m_;
  std::vector<std::size_t> community_;
  std::vector<double> total_;  // summed M-degree per community
  double two_m_;
  std::vector<double> links_;  // scratch, indexed by community
  std::vector<std::size_t> candidates_;
};

struct DuoLouvainOptions {
  std::uint64_t seed = 0;
  // Draw a fresh sweep order on every pass instead of once per level.
  bool reshuffle_each_pass = false;
  // Gains at or below this are treated as zero (rounding noise).
  double min_gain = 1e-12;
  std::size_t max_passes_per_level = 10000;
};

struct DuoLouvainResult {
  Partition partition;
  // Modularity of `partition` on the original M.
  double modularity = 0.0;
  std::size_t levels = 0;
  // Modularity on M after every pass, across all levels in order.
  std::vector<double> pass_modularity;
};

// Louvain with neighbourhoods taken from `a` and modularity gains from `m`.
// Throws Error(kDimensionMismatch) when the orders differ and
// Error(kEmptyGraph) when m has no weight.
DuoLouvainResult duo_louvain(const WeightedGraph& a, const WeightedGraph& m,
                             const DuoLouvainOptions& options = {});

struct SugenoLouvainOptions {
  Aggregator phi = Aggregator::kMin;        // pairwise operator
  Aggregator aggregator = Aggregator::kMax;  // across characteristics
  double gamma = 0.0;                        // weight of A in M
  Defuzzifier defuzzifier = Defuzzifier::kCentroid;
  DuoLouvainOptions louvain;
};

struct SugenoLouvainResult {
  DuoLouvainResult louvain;
  WeightedGraph synergy;   // F
  WeightedGraph combined;  // M
};

// Fuzzy pipeline: measures from every fuzzy vector, exact-Shapley synergy
// matrices (closed form where p = 1 and n exceeds the exact limit),
// aggregation, combination with A and Duo Louvain.
// Crisp entry point: one defuzzified vector and one p per characteristic.
// Uses the closed-form synergy when p = 1 and the graph is too large for the
// exact Shapley values.
SugenoLouvainResult md_sugeno_louvain(const WeightedGraph& a,
                                      std::span<const std::vector<double>> values,
                                      std::span<const double> ps,
                                      const SugenoLouvainOptions& options);
SugenoLouvainResult md_fuzzy_sugeno_louvain(const Mefvfg& g,
                                            const SugenoLouvainOptions& options);

// 1-additive pipeline over already defuzzified vectors.
SugenoLouvainResult md_additive_sugeno_louvain(
    const WeightedGraph& a, std::span<const std::vector<double>> values,
    const SugenoLouvainOptions& options);

}  // namespace fsl

#endif  // FSLOUVAIN_LOUVAIN_HPP_
