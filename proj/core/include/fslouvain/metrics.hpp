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

#ifndef FSLOUVAIN_METRICS_HPP_
#define FSLOUVAIN_METRICS_HPP_

#include <cstddef>
#include <vector>

#include "fslouvain/graph.hpp"

namespace fsl {

// Co-occurrence counts of two partitions over the same nodes.
class ContingencyTable {
 public:
  // Throws Error(kNodeSetMismatch) when the partitions cover different
  // numbers of nodes or are empty.
  ContingencyTable(const Partition& x, const Partition& y);

  std::size_t rows() const { return row_totals_.size(); }
  std::size_t cols() const { return col_totals_.size(); }
  std::size_t count(std::size_t r, std::size_t c) const {
    return counts_[r * cols() + c];
  }
  std::size_t row_total(std::size_t r) const { return row_totals_[r]; }
  std::size_t col_total(std::size_t c) const { return col_totals_[c]; }
  std::size_t total() const { return total_; }

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> row_totals_;
  std::vector<std::size_t> col_totals_;
  std::size_t total_;
};

// Shannon entropy (natural log) of the community-size distribution.
double entropy(const Partition& p);

double mutual_information(const ContingencyTable& t);

// 2 MI / (H(X) + H(Y)); 1 when both partitions are a single community.
double nmi(const Partition& x, const Partition& y);

}  // namespace fsl

#endif  // FSLOUVAIN_METRICS_HPP_
