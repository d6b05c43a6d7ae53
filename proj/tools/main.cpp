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

// fslouvain: generate benchmark instances, detect communities, score
// partitions and run experiment grids.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fslouvain/benchgen.hpp"
#include "fslouvain/error.hpp"
#include "fslouvain/experiment.hpp"
#include "fslouvain/io.hpp"
#include "fslouvain/louvain.hpp"
#include "fslouvain/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

constexpr const char* kFormats = R"(File formats (0-based node ids, '#' starts a comment line):

  Edge list (--graph, adjacency.edges): "u v [w]", w defaults to 1.
    # nodes 4
    0 1
    2 3 0.5

  Fuzzy vector (--vectors): trapezoid per node, or a label per node with --labels.
    node,a,b,c,d
    0,0,0,10,25
    1,60,70,80,100

  Label dictionary (--labels), used by "node,label" vectors:
    label,a,b,c,d
    VL,0,0,10,25
    H,60,70,80,100

  Crisp vectors (--vectors, vectors.csv): one row of positive values per characteristic.
    characteristic,0,1,2
    1,0.93,0.97,0.12
    2,0.88,0.91,0.07

  Partition (--out of detect, nmi inputs, truth_*.part): "node community".
    0 0
    1 0
    2 1

  Experiment config (--config), JSON; model and seed are required:
    {"model": 1, "networks": [1, 5, 9], "cases": [1, 5, 9],
     "replicates": 20, "gamma": 0, "seed": 7, "phi": "min", "Phi": "max",
     "output": "table3.csv"}
)";

struct GenArgs {
  int model = 0;
  int network = 0;
  int case_id = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct DetectArgs {
  std::string graph;
  std::vector<std::string> vectors;
  std::string labels;
  double gamma = 0.0;
  std::string phi = "min";
  std::string Phi = "max";
  std::vector<double> ps;
  std::uint64_t seed = 0;
  std::string out;
  std::string dot;
  std::string dump_matrix;
  bool reshuffle = false;
  bool mean_of_max = false;
};

struct NmiArgs {
  std::string first;
  std::string second;
};

struct ExperimentArgs {
  std::string config;
  std::optional<std::size_t> replicates;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  bool timing = false;
  bool table = false;
  std::string out;
};

fsl::Aggregator need_aggregator(const std::string& name, const char* flag) {
  const auto op = fsl::parse_aggregator(name);
  if (!op) {
    throw CLI::ValidationError(flag, "expected min, max or mean, got '" + name + "'");
  }
  return *op;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw fsl::Error(fsl::Errc::kIo, "cannot write " + path);
  return out;
}

std::string first_content_line(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fsl::Error(fsl::Errc::kIo, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    return line.substr(b);
  }
  return {};
}

int run_gen(const GenArgs& args) {
  const fsl::BenchmarkSpec spec =
      fsl::make_spec(args.model, args.network, args.case_id, args.seed);
  const fsl::BenchmarkInstance inst = fsl::generate_instance(spec);
  fsl::io::write_bundle(args.out, inst);
  std::cout << "wrote " << args.out << ": n=" << spec.n
            << " edges=" << inst.adjacency.total_weight() / 2.0
            << " A-communities=" << inst.truth_adjacency.community_count()
            << " F-communities=" << inst.truth_synergy.community_count() << '\n';
  return kExitOk;
}

void write_dot(const std::string& path, const fsl::WeightedGraph& m,
               const fsl::Partition& p) {
  const fsl::WeightedGraph c = fsl::contract(m, p);
  const auto members = p.communities();
  auto out = open_out(path);
  out << "graph communities {\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << "  c" << i << " [label=\"" << i << " (" << members[i].size()
        << ")\"];\n";
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c.weight(i, j) != 0.0) {
        out << "  c" << i << " -- c" << j << " [weight=" << c.weight(i, j)
            << "];\n";
      }
    }
  }
  out << "}\n";
}

int run_detect(const DetectArgs& args) {
  fsl::SugenoLouvainOptions opts;
  opts.phi = need_aggregator(args.phi, "--phi");
  opts.aggregator = need_aggregator(args.Phi, "--Phi");
  opts.gamma = args.gamma;
  opts.defuzzifier = args.mean_of_max ? fsl::Defuzzifier::kMeanOfMax
                                      : fsl::Defuzzifier::kCentroid;
  opts.louvain.seed = args.seed;
  opts.louvain.reshuffle_each_pass = args.reshuffle;
  if (opts.gamma < 0.0 || opts.gamma > 1.0) {
    throw CLI::ValidationError("--gamma", "must lie in [0, 1]");
  }

  const fsl::WeightedGraph a = fsl::io::read_edge_list(args.graph);
  std::optional<fsl::io::LabelDictionary> labels;
  if (!args.labels.empty()) labels = fsl::io::read_labels(args.labels);

  // Each --vectors file holds one fuzzy vector or several crisp ones.
  std::vector<std::vector<double>> values;
  for (const std::string& path : args.vectors) {
    const std::string header = first_content_line(path);
    if (header.rfind("characteristic", 0) == 0) {
      for (auto& row : fsl::io::read_vectors(path)) values.push_back(std::move(row));
    } else {
      const fsl::FuzzyVector v =
          fsl::io::read_fuzzy_vector(path, labels ? &*labels : nullptr);
      values.push_back(fsl::defuzzify_all(v, opts.defuzzifier));
    }
  }
  if (!args.ps.empty() && args.ps.size() != 1 && args.ps.size() != values.size()) {
    throw CLI::ValidationError(
        "--p", "give one value, or one per characteristic (" +
                   std::to_string(values.size()) + ")");
  }
  std::vector<double> ps(values.size(), args.ps.empty() ? 1.0 : args.ps.front());
  if (args.ps.size() == values.size()) ps = args.ps;

  fsl::WeightedGraph m;
  fsl::DuoLouvainResult result;
  if (opts.gamma == 1.0 || values.empty()) {
    if (!values.empty()) {
      std::cerr << "warning: gamma=1 gives vectors no weight; ignoring "
                << values.size() << " vector(s)\n";
    }
    m = a;
    result = fsl::duo_louvain(a, a, opts.louvain);
  } else {
    fsl::SugenoLouvainResult r = fsl::md_sugeno_louvain(a, values, ps, opts);
    m = std::move(r.combined);
    result = std::move(r.louvain);
  }

  if (!args.out.empty()) {
    auto out = open_out(args.out);
    fsl::io::write_partition(out, result.partition);
  } else {
    fsl::io::write_partition(std::cout, result.partition);
  }
  if (!args.dump_matrix.empty()) {
    auto out = open_out(args.dump_matrix);
    fsl::io::write_matrix_csv(out, m);
  }
  if (!args.dot.empty()) write_dot(args.dot, m, result.partition);

  char q[32];
  std::snprintf(q, sizeof q, "%.6f", result.modularity);
  (args.out.empty() ? std::cerr : std::cout)
      << "communities=" << result.partition.community_count() << " Q=" << q
      << " levels=" << result.levels << '\n';
  return kExitOk;
}

int run_nmi(const NmiArgs& args) {
  const auto x = fsl::io::read_partition_map(std::filesystem::path(args.first));
  const auto y = fsl::io::read_partition_map(std::filesystem::path(args.second));
  if (x.size() != y.size()) {
    throw fsl::Error(fsl::Errc::kNodeSetMismatch,
                     "partitions cover " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " nodes");
  }
  for (auto ix = x.begin(), iy = y.begin(); ix != x.end(); ++ix, ++iy) {
    if (ix->first != iy->first) {
      throw fsl::Error(fsl::Errc::kNodeSetMismatch,
                       "node " + std::to_string(ix->first) + " is in " +
                           args.first + " but not in " + args.second);
    }
  }
  // Node ids only need to match, so renumber them densely before scoring.
  std::vector<long long> lx, ly;
  for (const auto& [node, c] : x) lx.push_back(c);
  for (const auto& [node, c] : y) ly.push_back(c);
  std::map<long long, long long> dx, dy;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    dx[static_cast<long long>(i)] = lx[i];
    dy[static_cast<long long>(i)] = ly[i];
  }
  const double score =
      fsl::nmi(fsl::io::partition_from_map(dx), fsl::io::partition_from_map(dy));
  std::printf("%.6f\n", score);
  return kExitOk;
}

int run_experiment_cmd(const ExperimentArgs& args) {
  fsl::ExperimentConfig cfg;
  try {
    cfg = fsl::parse_experiment_config(fsl::io::read_text(args.config));
    if (args.replicates) cfg.replicates = *args.replicates;
    if (args.seed) cfg.seed = *args.seed;
    cfg.validate();
  } catch (const fsl::Error& e) {
    if (e.code() == fsl::Errc::kIo) throw;
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (args.jobs == 0) throw CLI::ValidationError("--jobs", "must be positive");
  const fsl::ExperimentResult result = fsl::run_experiment(cfg, args.jobs);

  const std::string path = !args.out.empty() ? args.out : cfg.output;
  std::ostringstream csv;
  fsl::write_experiment_csv(csv, result, args.timing);
  if (path.empty()) {
    std::cout << csv.str();
  } else {
    auto out = open_out(path);
    out << csv.str();
  }
  if (args.table) fsl::write_experiment_table(std::cerr, result);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy Sugeno-Louvain community detection"};
  app.footer(kFormats);
  app.require_subcommand(1);
  app.set_version_flag("--version", "fslouvain 0.1.0");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark instance bundle");
  gen_cmd->add_option("--model", gen.model, "Model preset 1..4")->required();
  gen_cmd->add_option("--network", gen.network, "Edge-probability row 1..9")
      ->required();
  gen_cmd->add_option("--case", gen.case_id, "Vector-shape row 1..9")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.out,
                      "Output directory (adjacency.edges, vectors.csv, "
                      "truth_A.part, truth_F.part, spec.json)")
      ->required();

  DetectArgs det;
  auto* det_cmd = app.add_subcommand("detect", "Detect communities");
  det_cmd->add_option("--graph", det.graph, "Edge list")->required()->check(
      CLI::ExistingFile);
  det_cmd->add_option("--vectors", det.vectors,
                      "Fuzzy or crisp vector file (repeatable)")
      ->check(CLI::ExistingFile);
  det_cmd->add_option("--labels", det.labels, "Label dictionary")
      ->check(CLI::ExistingFile);
  det_cmd->add_option("--gamma", det.gamma, "Weight of the adjacency in M")
      ->capture_default_str();
  det_cmd->add_option("--phi", det.phi, "Pairwise operator: min|max|mean")
      ->capture_default_str();
  det_cmd->add_option("--Phi", det.Phi,
                      "Aggregation across characteristics: min|max|mean")
      ->capture_default_str();
  det_cmd->add_option("--p", det.ps,
                      "Measure parameter in (0, 1]; one value or one per "
                      "characteristic (default 1)");
  det_cmd->add_option("--seed", det.seed, "Random seed")->required();
  det_cmd->add_option("--out", det.out, "Partition output (default stdout)");
  det_cmd->add_option("--dot", det.dot, "Write the community graph as DOT");
  det_cmd->add_option("--dump-matrix", det.dump_matrix,
                      "Write the combined matrix M as CSV");
  det_cmd->add_flag("--reshuffle", det.reshuffle,
                    "New sweep order on every pass");
  det_cmd->add_flag("--mean-of-max", det.mean_of_max,
                    "Defuzzify with mean of maximum instead of the centroid");

  NmiArgs nmi;
  auto* nmi_cmd = app.add_subcommand("nmi", "Normalized mutual information of two partitions");
  nmi_cmd->add_option("first", nmi.first, "Partition file")->required()->check(
      CLI::ExistingFile);
  nmi_cmd->add_option("second", nmi.second, "Partition file")->required()->check(
      CLI::ExistingFile);

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a benchmark grid");
  exp_cmd->add_option("--config", exp.config, "JSON config")->required()->check(
      CLI::ExistingFile);
  exp_cmd->add_option("--replicates", exp.replicates, "Override replicates");
  exp_cmd->add_option("--seed", exp.seed, "Override the master seed");
  exp_cmd->add_option("--jobs", exp.jobs, "Worker threads")->capture_default_str();
  exp_cmd->add_flag("--timing", exp.timing,
                    "Record wall time (output is then not byte-stable)");
  exp_cmd->add_flag("--table", exp.table, "Also print a network x case table to stderr");
  exp_cmd->add_option("--out", exp.out, "CSV output (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*det_cmd) return run_detect(det);
    if (*nmi_cmd) return run_nmi(nmi);
    if (*exp_cmd) return run_experiment_cmd(exp);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fsl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == fsl::Errc::kUnknownModel ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
