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

#ifndef FSLOUVAIN_SYNERGY_HPP_
#define FSLOUVAIN_SYNERGY_HPP_

#include <optional>
#include <span>
#include <string_view>

#include "fslouvain/graph.hpp"
#include "fslouvain/sugeno.hpp"

namespace fsl {

// The OWA instances used both as the pairwise operator phi and as the
// element-wise matrix aggregator.
enum class Aggregator { kMin, kMax, kMean };

double aggregate(Aggregator op, double x, double y);
std::string_view aggregator_name(Aggregator op);
std::optional<Aggregator> parse_aggregator(std::string_view name);

// Synergy matrix of one characteristic for the additive (p = 1) measure:
//   F_ij = phi(|Sh_i - Sh_i^j|, |Sh_j - Sh_j^i|),  F_ii = 0,
// with Sh_i = D_i / sum_k D_k and Sh_i^j = D_i / sum_{k != j} D_k.
WeightedGraph synergy_matrix_additive(std::span<const double> values,
                                      Aggregator phi = Aggregator::kMin);

// Same matrix for an arbitrary Sugeno measure using exact Shapley values.
// Sh_i^j is taken on the measure rebuilt over V \ {j} from the remaining
// densities with the same p. Throws Error(kGroundSetTooLarge) for n > 16.
WeightedGraph synergy_matrix_general(const SugenoLambdaMeasure& m,
                                     Aggregator phi = Aggregator::kMin);

// Element-wise aggregation of r equally sized matrices. Throws
// Error(kDimensionMismatch) on size mismatch or an empty list.
WeightedGraph aggregate_matrices(std::span<const WeightedGraph> mats,
                                 Aggregator op = Aggregator::kMax);

// gamma * a + (1 - gamma) * f. Throws Error(kGammaOutOfRange) for gamma
// outside [0, 1] and Error(kDimensionMismatch) on size mismatch.
WeightedGraph combine(const WeightedGraph& a, const WeightedGraph& f,
                      double gamma);

}  // namespace fsl

#endif  // FSLOUVAIN_SYNERGY_HPP_
