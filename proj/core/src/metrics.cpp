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

#include "fslouvain/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fslouvain/error.hpp"

namespace fsl {
namespace {

double entropy_of_counts(const std::vector<std::size_t>& counts,
                         std::size_t total) {
  const double n = static_cast<double>(total);
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return h;
}

// Every nonzero cell is the only one in its row and column.
bool same_up_to_relabeling(const ContingencyTable& t) {
  if (t.rows() != t.cols()) return false;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const std::size_t v = t.count(r, c);
      if (v != 0 && (v != t.row_total(r) || v != t.col_total(c))) return false;
    }
  }
  return true;
}

}  // namespace

ContingencyTable::ContingencyTable(const Partition& x, const Partition& y)
    : total_(x.size()) {
  if (x.size() != y.size()) {
    throw Error(Errc::kNodeSetMismatch,
                "partitions cover " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()) + " nodes");
  }
  if (x.size() == 0) {
    throw Error(Errc::kNodeSetMismatch, "partitions are empty");
  }
  row_totals_.assign(x.community_count(), 0);
  col_totals_.assign(y.community_count(), 0);
  counts_.assign(rows() * cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t r = x.community_of(i);
    const std::size_t c = y.community_of(i);
    ++counts_[r * cols() + c];
    ++row_totals_[r];
    ++col_totals_[c];
  }
}

double entropy(const Partition& p) {
  if (p.size() == 0) {
    throw Error(Errc::kInvalidArgument, "entropy of an empty partition");
  }
  std::vector<std::size_t> sizes;
  sizes.reserve(p.community_count());
  for (const auto& c : p.communities()) sizes.push_back(c.size());
  return entropy_of_counts(sizes, p.size());
}

double mutual_information(const ContingencyTable& t) {
  const double n = static_cast<double>(t.total());
  // Terms are summed in sorted order so that transposing the table (swapping
  // the partitions) gives a bit-identical result.
  std::vector<double> terms;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const std::size_t nxy = t.count(r, c);
      if (nxy == 0) continue;
      // P(x,y) log(P(x,y) / (P(x) P(y))) with counts: n_xy n / (n_x n_y).
      const double ratio = static_cast<double>(nxy) * n /
                           (static_cast<double>(t.row_total(r)) *
                            static_cast<double>(t.col_total(c)));
      terms.push_back(static_cast<double>(nxy) / n * std::log(ratio));
    }
  }
  std::sort(terms.begin(), terms.end());
  double mi = 0.0;
  for (double v : terms) mi += v;
  return std::max(mi, 0.0);
}

double nmi(const Partition& x, const Partition& y) {
  const ContingencyTable t(x, y);
  const double hx = entropy(x);
  const double hy = entropy(y);
  if (hx + hy == 0.0) return 1.0;
  if (same_up_to_relabeling(t)) return 1.0;
  const double mi = mutual_information(t);
  return std::clamp(2.0 * mi / (hx + hy), 0.0, 1.0);
}

}  // namespace fsl
