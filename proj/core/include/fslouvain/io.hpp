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

#ifndef FSLOUVAIN_IO_HPP_
#define FSLOUVAIN_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fslouvain/benchgen.hpp"
#include "fslouvain/fuzzy.hpp"
#include "fslouvain/graph.hpp"

namespace fsl::io {

// Parse failures throw Error(kParse) with "<source>:<line>: " prefixed;
// unreadable files throw Error(kIo).

// Edge list: "u v [w]" per line, 0-based ids, w defaults to 1, '#' starts a
// comment. A "# nodes N" comment fixes the node count (otherwise max id + 1,
// raised to `min_nodes`).
WeightedGraph read_edge_list(std::istream& in, const std::string& source,
                             std::size_t min_nodes = 0);
WeightedGraph read_edge_list(const std::filesystem::path& path,
                             std::size_t min_nodes = 0);
void write_edge_list(std::ostream& out, const WeightedGraph& g);

// Partition file: "node community" per line, '#' comments.
std::map<long long, long long> read_partition_map(std::istream& in,
                                                  const std::string& source);
std::map<long long, long long> read_partition_map(
    const std::filesystem::path& path);
// Requires the nodes to be exactly 0..n-1.
Partition partition_from_map(const std::map<long long, long long>& m);
void write_partition(std::ostream& out, const Partition& p);

// Linguistic labels: header "label,a,b,c,d".
using LabelDictionary = std::map<std::string, TrapezoidalFuzzySet>;
LabelDictionary read_labels(std::istream& in, const std::string& source);
LabelDictionary read_labels(const std::filesystem::path& path);

// Fuzzy vector: header "node,a,b,c,d" or, with a dictionary, "node,label".
// Nodes must be exactly 0..n-1 in any order.
FuzzyVector read_fuzzy_vector(std::istream& in, const std::string& source,
                              const LabelDictionary* labels = nullptr);
FuzzyVector read_fuzzy_vector(const std::filesystem::path& path,
                              const LabelDictionary* labels = nullptr);

// Defuzzified vectors, one row per characteristic:
//   characteristic,0,1,...,n-1
//   1,0.93,0.97,...
std::vector<std::vector<double>> read_vectors(std::istream& in,
                                              const std::string& source);
std::vector<std::vector<double>> read_vectors(const std::filesystem::path& path);
void write_vectors(std::ostream& out,
                   const std::vector<std::vector<double>>& vectors);

// Dense matrix with a header row of node ids:
//   node,0,1,...,n-1
//   0,w00,w01,...
WeightedGraph read_matrix_csv(std::istream& in, const std::string& source);
void write_matrix_csv(std::ostream& out, const WeightedGraph& g);

std::string spec_to_json(const BenchmarkSpec& spec);
BenchmarkSpec spec_from_json(const std::string& text);

// Writes adjacency.edges, vectors.csv, truth_A.part, truth_F.part, spec.json
// into `dir` (created if missing).
void write_bundle(const std::filesystem::path& dir, const BenchmarkInstance& inst);

std::string read_text(const std::filesystem::path& path);

}  // namespace fsl::io

#endif  // FSLOUVAIN_IO_HPP_
