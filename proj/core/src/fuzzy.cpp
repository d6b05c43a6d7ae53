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

#include "fslouvain/fuzzy.hpp"

#include <cmath>
#include <sstream>

#include "fslouvain/error.hpp"

namespace fsl {

TrapezoidalFuzzySet::TrapezoidalFuzzySet(double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d) {
  const bool finite = std::isfinite(a) && std::isfinite(b) &&
                      std::isfinite(c) && std::isfinite(d);
  if (!finite || !(a <= b && b <= c && c <= d)) {
    std::ostringstream os;
    os << "trapezoid (" << a << "," << b << "," << c << "," << d
       << ") must satisfy a <= b <= c <= d";
    throw Error(Errc::kInvalidArgument, os.str());
  }
}

double membership(const TrapezoidalFuzzySet& fs, double x) {
  if (x < fs.a()) return 0.0;
  if (x < fs.b()) return (x - fs.a()) / (fs.b() - fs.a());
  if (x <= fs.c()) return 1.0;
  if (x < fs.d()) return (fs.d() - x) / (fs.d() - fs.c());
  return 0.0;
}

double defuzzify(const TrapezoidalFuzzySet& fs, Defuzzifier method) {
  const double a = fs.a(), b = fs.b(), c = fs.c(), d = fs.d();
  switch (method) {
    case Defuzzifier::kMeanOfMax:
      return 0.5 * (b + c);
    case Defuzzifier::kCentroid:
      break;
  }
  // Twice the area is (c + d) - (a + b); zero only for a point set.
  const double twice_area = (c + d) - (a + b);
  if (twice_area <= 0.0) {
    throw Error(Errc::kZeroArea, "centroid of a point fuzzy set is undefined");
  }
  const double moment = (c * c + c * d + d * d) - (a * a + a * b + b * b);
  const double x = moment / (3.0 * twice_area);
  // Guard against rounding pushing the value just outside the support.
  return std::fmin(std::fmax(x, a), d);
}

std::vector<double> defuzzify_all(std::span<const TrapezoidalFuzzySet> vector,
                                  Defuzzifier method) {
  std::vector<double> out;
  out.reserve(vector.size());
  for (std::size_t i = 0; i < vector.size(); ++i) {
    const double v = defuzzify(vector[i], method);
    if (!(v > 0.0)) {
      throw Error(Errc::kNonPositiveDensity,
                  "defuzzified value of node " + std::to_string(i) +
                      " is not positive");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace fsl
