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

#ifndef FSLOUVAIN_EXPERIMENT_HPP_
#define FSLOUVAIN_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fslouvain/synergy.hpp"

namespace fsl {

struct ExperimentConfig {
  int model = 1;
  std::vector<int> networks;
  std::vector<int> cases;
  std::size_t replicates = 100;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::string output;  // CSV path; empty means the caller decides
  Aggregator phi = Aggregator::kMin;
  Aggregator aggregator = Aggregator::kMax;

  // Throws Error(kInvalidArgument / kUnknownModel / kGammaOutOfRange).
  void validate() const;
};

// Parses the JSON config, e.g.
//   {"model": 1, "networks": [1, 5, 9], "cases": [1, 5, 9],
//    "replicates": 100, "gamma": 0.0, "seed": 7, "output": "table3.csv"}
// Unknown keys and wrong types throw Error(kParse).
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct CellResult {
  int network = 0;
  int case_id = 0;
  double mean_nmi = 0.0;
  double std_nmi = 0.0;  // sample standard deviation; 0 for one replicate
  std::size_t replicates = 0;
  double seconds = 0.0;  // summed wall time of the replicates
  std::vector<double> nmi;  // per replicate, in replicate order
};

struct ExperimentResult {
  int model = 0;
  std::vector<CellResult> cells;  // networks outer, cases inner
};

// Seed of replicate `rep` in a cell. Depends only on its arguments, so the
// first R replicates are the same whatever the total count.
std::uint64_t replicate_seed(std::uint64_t master, int model, int network,
                             int case_id, std::size_t rep);

// NMI of one replicate against the planted synergy partition.
double run_replicate(const ExperimentConfig& cfg, int network, int case_id,
                     std::size_t rep);

// Runs every (network, case) cell with up to `jobs` worker threads. Results
// do not depend on `jobs`. Errors carry the cell coordinates.
ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                std::size_t jobs = 1);

// Long format: header network,case,mean_nmi,std_nmi,replicates,seconds.
// With `timing` false the seconds column is written as 0 so that output is
// byte-stable.
void write_experiment_csv(std::ostream& os, const ExperimentResult& result,
                          bool timing);

// Networks as rows, cases as columns, mean NMI in the cells.
void write_experiment_table(std::ostream& os, const ExperimentResult& result);

}  // namespace fsl

#endif  // FSLOUVAIN_EXPERIMENT_HPP_
