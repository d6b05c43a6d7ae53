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

#ifndef FSLOUVAIN_GRAPH_HPP_
#define FSLOUVAIN_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fslouvain/fuzzy.hpp"

namespace fsl {

// Undirected weighted graph stored as a dense symmetric n x n matrix.
//
// The same type carries the adjacency matrix, per-characteristic synergy
// matrices and the combined Louvain weight matrix. Degrees and the total
// weight 2m count every off-diagonal entry from both rows and each diagonal
// (self-loop) entry once, so modularity is unchanged by contraction.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Empty graph on n nodes.
  explicit WeightedGraph(std::size_t n);
  // Row-major n x n weights. Throws Error(kInvalidArgument) unless the matrix
  // is square, symmetric, finite and nonnegative.
  WeightedGraph(std::size_t n, std::vector<double> weights);

  std::size_t size() const { return n_; }
  double weight(std::size_t i, std::size_t j) const {
    return weights_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {weights_.data() + i * n_, n_};
  }
  std::span<const double> weights() const { return weights_; }

  double degree(std::size_t i) const { return degrees_[i]; }
  // 2m: the sum of all matrix entries.
  double total_weight() const { return total_weight_; }

  friend bool operator==(const WeightedGraph& x, const WeightedGraph& y) {
    return x.n_ == y.n_ && x.weights_ == y.weights_;
  }

 private:
  void finalize();

  std::size_t n_ = 0;
  std::vector<double> weights_;
  std::vector<double> degrees_;
  double total_weight_ = 0.0;
};

struct WeightedEdge {
  std::size_t u;
  std::size_t v;
  double w = 1.0;
};

// Accumulates each edge into both (u, v) and (v, u); a self-loop adds w to
// the diagonal once.
WeightedGraph graph_from_edges(std::size_t n, std::span<const WeightedEdge> edges);

inline double degree(const WeightedGraph& g, std::size_t i) {
  return g.degree(i);
}

// Assignment of nodes 0..n-1 to communities 0..K-1. Community ids are dense
// and numbered in order of first appearance over increasing node index.
class Partition {
 public:
  Partition() = default;
  // Relabels arbitrary ids to the canonical dense numbering.
  explicit Partition(std::span<const std::size_t> labels);

  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);
  // Blocks of consecutive nodes with the given sizes.
  static Partition from_sizes(std::span<const std::size_t> sizes);
  // Throws Error(kInvalidArgument) unless the groups cover 0..n-1 exactly once.
  static Partition from_groups(std::size_t n,
                               const std::vector<std::vector<std::size_t>>& groups);

  std::size_t size() const { return assignment_.size(); }
  std::size_t community_count() const { return communities_.size(); }
  std::size_t community_of(std::size_t node) const { return assignment_[node]; }
  std::span<const std::size_t> assignment() const { return assignment_; }
  const std::vector<std::vector<std::size_t>>& communities() const {
    return communities_;
  }

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.assignment_ == y.assignment_;
  }

 private:
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> communities_;
};

// Community graph: entry (C, D) sums g over C x D. Intra-community weight
// (both orders of each pair plus original self-loops) lands on the diagonal,
// so the total weight is preserved.
WeightedGraph contract(const WeightedGraph& g, const Partition& p);

// Multi-dimensional extended fuzzy graph: a crisp graph plus r fuzzy vectors,
// each paired with its measure parameter p.
struct Mefvfg {
  WeightedGraph graph;
  std::vector<FuzzyVector> vectors;
  std::vector<double> ps;

  // Throws Error(kDimensionMismatch / kInvalidArgument) on malformed input.
  void validate() const;
};

}  // namespace fsl

#endif  // FSLOUVAIN_GRAPH_HPP_
