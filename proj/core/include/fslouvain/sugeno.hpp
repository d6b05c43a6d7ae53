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

#ifndef FSLOUVAIN_SUGENO_HPP_
#define FSLOUVAIN_SUGENO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fslouvain/fuzzy.hpp"

namespace fsl {

// Exact Shapley computation enumerates 2^n coalitions; above this size the
// caller has to use the 1-additive closed form.
inline constexpr std::size_t kMaxExactShapleyPlayers = 16;

// Sugeno lambda-measure given by its singleton densities. The measure of a
// coalition S is (prod_{i in S}(1 + lambda*mu_i) - 1) / lambda, or the plain
// sum of densities when lambda == 0.
class SugenoLambdaMeasure {
 public:
  // Densities mu_i = p * D_i / sum_k D_k. For p == 1 the measure is additive
  // and lambda is exactly zero; otherwise lambda is the unique positive root
  // of lambda + 1 = prod(1 + lambda * mu_i).
  //
  // Throws Error(kNonPositiveDensity) if some D_i <= 0, Error(kInvalidArgument)
  // for n < 2 or p outside (0, 1], Error(kRootNotFound) if the root cannot be
  // bracketed.
  static SugenoLambdaMeasure from_defuzzified(std::span<const double> values,
                                              double p);

  // Same construction from densities that already sum to p.
  static SugenoLambdaMeasure from_densities(std::vector<double> densities,
                                            double p);

  std::size_t size() const { return densities_.size(); }
  std::span<const double> densities() const { return densities_; }
  double density(std::size_t i) const { return densities_[i]; }
  double lambda() const { return lambda_; }
  double p() const { return p_; }

  // |prod(1 + lambda*mu_i) - 1 - lambda|.
  double residual() const;

  double value(std::span<const std::size_t> coalition) const;
  // Bit k of `mask` selects node k; requires size() <= 64.
  double value_of_mask(std::uint64_t mask) const;

 private:
  SugenoLambdaMeasure(std::vector<double> densities, double lambda, double p)
      : densities_(std::move(densities)), lambda_(lambda), p_(p) {}

  std::vector<double> densities_;
  double lambda_;
  double p_;
};

// Builds the measure from a fuzzy vector via the given defuzzifier.
SugenoLambdaMeasure build_measure(std::span<const TrapezoidalFuzzySet> vector,
                                  double p,
                                  Defuzzifier method = Defuzzifier::kCentroid);

// Positive root of prod(1 + lambda*mu_i) = 1 + lambda for densities summing to
// less than one; zero when they sum to one (within rounding).
double solve_lambda(std::span<const double> densities);

double coalition_value(const SugenoLambdaMeasure& m,
                       std::span<const std::size_t> coalition);

// Shapley value of every player of the game (ground, m restricted to ground),
// returned in the order of `ground`. Throws Error(kGroundSetTooLarge) when
// |ground| > kMaxExactShapleyPlayers.
std::vector<double> shapley_exact(const SugenoLambdaMeasure& m,
                                  std::span<const std::size_t> ground);

// Closed-form Shapley value of node i for the additive measure built from the
// defuzzified values: D_i / sum_k D_k, or D_i / sum_{k != j} D_k when node j
// is excluded from the ground set.
double shapley_additive(std::span<const double> values, std::size_t i,
                        std::optional<std::size_t> excluded = std::nullopt);

}  // namespace fsl

#endif  // FSLOUVAIN_SUGENO_HPP_
