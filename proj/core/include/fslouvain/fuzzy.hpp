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

#ifndef FSLOUVAIN_FUZZY_HPP_
#define FSLOUVAIN_FUZZY_HPP_

#include <span>
#include <vector>

namespace fsl {

// Trapezoidal fuzzy set (a, b, c, d) with a <= b <= c <= d. The membership
// rises linearly on [a, b], equals one on [b, c] and falls linearly on [c, d].
class TrapezoidalFuzzySet {
 public:
  // Throws Error(kInvalidArgument) unless a <= b <= c <= d, all finite.
  TrapezoidalFuzzySet(double a, double b, double c, double d);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  bool is_point() const { return a_ == d_; }

  friend bool operator==(const TrapezoidalFuzzySet&,
                         const TrapezoidalFuzzySet&) = default;

 private:
  double a_;
  double b_;
  double c_;
  double d_;
};

// One fuzzy set per node.
using FuzzyVector = std::vector<TrapezoidalFuzzySet>;

// Degree of membership of x, in [0, 1]. Vertical edges (a == b or c == d)
// take the value of the flat top.
double membership(const TrapezoidalFuzzySet& fs, double x);

enum class Defuzzifier {
  kCentroid,   // centroid of area
  kMeanOfMax,  // midpoint of the core [b, c]
};

// Crisp representative of `fs`. Centroid throws Error(kZeroArea) for a point
// set; mean-of-max is defined everywhere.
double defuzzify(const TrapezoidalFuzzySet& fs,
                 Defuzzifier method = Defuzzifier::kCentroid);

// Defuzzifies every entry. Throws Error(kNonPositiveDensity) if any value is
// not strictly positive, since downstream measures divide by these values.
std::vector<double> defuzzify_all(std::span<const TrapezoidalFuzzySet> vector,
                                  Defuzzifier method = Defuzzifier::kCentroid);

}  // namespace fsl

#endif  // FSLOUVAIN_FUZZY_HPP_
