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

#include "fslouvain/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fslouvain/error.hpp"

namespace fsl {

WeightedGraph::WeightedGraph(std::size_t n)
    : n_(n), weights_(n * n, 0.0), degrees_(n, 0.0) {}

WeightedGraph::WeightedGraph(std::size_t n, std::vector<double> weights)
    : n_(n), weights_(std::move(weights)) {
  if (weights_.size() != n * n) {
    throw Error(Errc::kInvalidArgument,
                "weight matrix has " + std::to_string(weights_.size()) +
                    " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double w = weights_[i * n + j];
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(Errc::kInvalidArgument,
                    "weight (" + std::to_string(i) + "," + std::to_string(j) +
                        ") must be finite and nonnegative");
      }
      if (w != weights_[j * n + i]) {
        throw Error(Errc::kInvalidArgument,
                    "weight matrix is not symmetric at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      }
    }
  }
  finalize();
}

void WeightedGraph::finalize() {
  degrees_.assign(n_, 0.0);
  total_weight_ = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double k = 0.0;
    for (std::size_t j = 0; j < n_; ++j) k += weights_[i * n_ + j];
    degrees_[i] = k;
    total_weight_ += k;
  }
}

WeightedGraph graph_from_edges(std::size_t n,
                               std::span<const WeightedEdge> edges) {
  std::vector<double> w(n * n, 0.0);
  for (const WeightedEdge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(Errc::kInvalidArgument,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside a graph of " + std::to_string(n) + " nodes");
    }
    w[e.u * n + e.v] += e.w;
    if (e.u != e.v) w[e.v * n + e.u] += e.w;
  }
  return WeightedGraph(n, std::move(w));
}

Partition::Partition(std::span<const std::size_t> labels) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::size_t max_label = 0;
  for (std::size_t l : labels) max_label = std::max(max_label, l);
  std::vector<std::size_t> remap(labels.empty() ? 0 : max_label + 1, kUnset);
  assignment_.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::size_t& id = remap[labels[i]];
    if (id == kUnset) {
      id = communities_.size();
      communities_.emplace_back();
    }
    assignment_[i] = id;
    communities_[id].push_back(i);
  }
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return Partition(labels);
}

Partition Partition::whole(std::size_t n) {
  std::vector<std::size_t> labels(n, 0);
  return Partition(labels);
}

Partition Partition::from_sizes(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> labels;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    labels.insert(labels.end(), sizes[c], c);
  }
  return Partition(labels);
}

Partition Partition::from_groups(
    std::size_t n, const std::vector<std::vector<std::size_t>>& groups) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> labels(n, kUnset);
  for (std::size_t c = 0; c < groups.size(); ++c) {
    for (std::size_t node : groups[c]) {
      if (node >= n || labels[node] != kUnset) {
        throw Error(Errc::kInvalidArgument,
                    "node " + std::to_string(node) +
                        " is out of range or assigned twice");
      }
      labels[node] = c;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == kUnset) {
      throw Error(Errc::kInvalidArgument,
                  "node " + std::to_string(i) + " is not assigned");
    }
  }
  return Partition(labels);
}

WeightedGraph contract(const WeightedGraph& g, const Partition& p) {
  if (p.size() != g.size()) {
    throw Error(Errc::kDimensionMismatch,
                "partition covers " + std::to_string(p.size()) +
                    " nodes, graph has " + std::to_string(g.size()));
  }
  const std::size_t n = g.size();
  const std::size_t k = p.community_count();
  std::vector<double> w(k * k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ci = p.community_of(i);
    const auto row = g.row(i);
    double* out = w.data() + ci * k;
    for (std::size_t j = 0; j < n; ++j) {
      out[p.community_of(j)] += row[j];
    }
  }
  // Summation order differs between (C, D) and (D, C); mirror the upper
  // triangle so the result is exactly symmetric.
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c + 1; d < k; ++d) w[d * k + c] = w[c * k + d];
  }
  return WeightedGraph(k, std::move(w));
}

void Mefvfg::validate() const {
  if (vectors.empty()) {
    throw Error(Errc::kInvalidArgument, "at least one fuzzy vector is required");
  }
  if (vectors.size() != ps.size()) {
    throw Error(Errc::kDimensionMismatch,
                "number of p parameters differs from number of vectors");
  }
  for (const FuzzyVector& v : vectors) {
    if (v.size() != graph.size()) {
      throw Error(Errc::kDimensionMismatch,
                  "fuzzy vector length " + std::to_string(v.size()) +
                      " differs from graph order " +
                      std::to_string(graph.size()));
    }
  }
  for (double p : ps) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw Error(Errc::kInvalidArgument, "p must lie in (0, 1]");
    }
  }
}

}  // namespace fsl
