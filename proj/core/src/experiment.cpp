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

#include "fslouvain/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "fslouvain/benchgen.hpp"
#include "fslouvain/error.hpp"
#include "fslouvain/louvain.hpp"
#include "fslouvain/metrics.hpp"
#include "fslouvain/random.hpp"
#include "json.hpp"

namespace fsl {
namespace {

using nlohmann::json;

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  model_preset(model);
  if (networks.empty() || cases.empty()) {
    throw Error(Errc::kInvalidArgument, "networks and cases must be non-empty");
  }
  for (int nw : networks) network_params(nw);
  for (int c : cases) case_params(c);
  if (replicates < 1) {
    throw Error(Errc::kInvalidArgument, "replicates must be at least 1");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(Errc::kGammaOutOfRange, "gamma must lie in [0, 1]");
  }
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kParse, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(Errc::kParse, "config must be a JSON object");
  }
  ExperimentConfig cfg;
  bool has_model = false;
  bool has_seed = false;
  try {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const std::string& key = it.key();
      const json& v = it.value();
      if (key == "model") {
        cfg.model = v.get<int>();
        has_model = true;
      } else if (key == "networks") {
        cfg.networks = v.get<std::vector<int>>();
      } else if (key == "cases") {
        cfg.cases = v.get<std::vector<int>>();
      } else if (key == "replicates") {
        cfg.replicates = v.get<std::size_t>();
      } else if (key == "gamma") {
        cfg.gamma = v.get<double>();
      } else if (key == "seed") {
        cfg.seed = v.get<std::uint64_t>();
        has_seed = true;
      } else if (key == "output") {
        cfg.output = v.get<std::string>();
      } else if (key == "phi" || key == "Phi") {
        const auto op = parse_aggregator(v.get<std::string>());
        if (!op) throw Error(Errc::kParse, key + " must be min, max or mean");
        (key == "phi" ? cfg.phi : cfg.aggregator) = *op;
      } else {
        throw Error(Errc::kParse, "unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::kParse, std::string("config has a wrong type: ") + e.what());
  }
  if (!has_model) throw Error(Errc::kParse, "config is missing 'model'");
  if (!has_seed) throw Error(Errc::kParse, "config is missing 'seed'");
  if (cfg.networks.empty()) {
    for (int i = 1; i <= kNetworkCount; ++i) cfg.networks.push_back(i);
  }
  if (cfg.cases.empty()) {
    for (int i = 1; i <= kCaseCount; ++i) cfg.cases.push_back(i);
  }
  return cfg;
}

std::uint64_t replicate_seed(std::uint64_t master, int model, int network,
                             int case_id, std::size_t rep) {
  return Rng::substream(master, {static_cast<std::uint64_t>(model),
                                 static_cast<std::uint64_t>(network),
                                 static_cast<std::uint64_t>(case_id),
                                 static_cast<std::uint64_t>(rep)})
      .next_u64();
}

double run_replicate(const ExperimentConfig& cfg, int network, int case_id,
                     std::size_t rep) {
  const std::uint64_t seed =
      replicate_seed(cfg.seed, cfg.model, network, case_id, rep);
  const BenchmarkInstance inst =
      generate_instance(make_spec(cfg.model, network, case_id, seed));
  SugenoLouvainOptions opts;
  opts.phi = cfg.phi;
  opts.aggregator = cfg.aggregator;
  opts.gamma = cfg.gamma;
  opts.louvain.seed = mix64(seed);
  const SugenoLouvainResult r =
      md_additive_sugeno_louvain(inst.adjacency, inst.vectors, opts);
  return nmi(r.louvain.partition, inst.truth_synergy);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t jobs) {
  cfg.validate();
  struct Task {
    std::size_t cell;
    std::size_t rep;
  };
  ExperimentResult result;
  result.model = cfg.model;
  std::vector<Task> tasks;
  for (int nw : cfg.networks) {
    for (int c : cfg.cases) {
      CellResult cell;
      cell.network = nw;
      cell.case_id = c;
      cell.replicates = cfg.replicates;
      cell.nmi.assign(cfg.replicates, 0.0);
      for (std::size_t r = 0; r < cfg.replicates; ++r) {
        tasks.push_back({result.cells.size(), r});
      }
      result.cells.push_back(std::move(cell));
    }
  }
  std::vector<double> seconds(tasks.size(), 0.0);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error) return;
      }
      CellResult& cell = result.cells[tasks[t].cell];
      const auto start = std::chrono::steady_clock::now();
      try {
        cell.nmi[tasks[t].rep] =
            run_replicate(cfg, cell.network, cell.case_id, tasks[t].rep);
      } catch (const Error& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::make_exception_ptr(
              Error(e.code(), "network " + std::to_string(cell.network) +
                                  ", case " + std::to_string(cell.case_id) +
                                  ", replicate " +
                                  std::to_string(tasks[t].rep) + ": " +
                                  e.what()));
        }
        return;
      }
      const std::chrono::duration<double> took =
          std::chrono::steady_clock::now() - start;
      seconds[t] = took.count();
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Reductions in replicate order keep the summary bit-stable.
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    result.cells[tasks[t].cell].seconds += seconds[t];
  }
  for (CellResult& cell : result.cells) {
    double mean = 0.0;
    for (double v : cell.nmi) mean += v;
    mean /= static_cast<double>(cell.nmi.size());
    double var = 0.0;
    for (double v : cell.nmi) var += (v - mean) * (v - mean);
    cell.mean_nmi = mean;
    cell.std_nmi = cell.nmi.size() > 1
                       ? std::sqrt(var / static_cast<double>(cell.nmi.size() - 1))
                       : 0.0;
  }
  return result;
}

void write_experiment_csv(std::ostream& os, const ExperimentResult& result,
                          bool timing) {
  os << "network,case,mean_nmi,std_nmi,replicates,seconds\n";
  for (const CellResult& c : result.cells) {
    os << c.network << ',' << c.case_id << ',' << format_fixed(c.mean_nmi, 6)
       << ',' << format_fixed(c.std_nmi, 6) << ',' << c.replicates << ','
       << format_fixed(timing ? c.seconds : 0.0, 3) << '\n';
  }
}

void write_experiment_table(std::ostream& os, const ExperimentResult& result) {
  std::vector<int> cases;
  std::map<std::pair<int, int>, double> value;
  std::vector<int> networks;
  for (const CellResult& c : result.cells) {
    if (std::find(cases.begin(), cases.end(), c.case_id) == cases.end()) {
      cases.push_back(c.case_id);
    }
    if (std::find(networks.begin(), networks.end(), c.network) == networks.end()) {
      networks.push_back(c.network);
    }
    value[{c.network, c.case_id}] = c.mean_nmi;
  }
  os << "NMI model " << result.model;
  for (int c : cases) os << ",case " << c;
  os << '\n';
  for (int nw : networks) {
    os << "network " << nw;
    for (int c : cases) os << ',' << format_fixed(value[{nw, c}], 4);
    os << '\n';
  }
}

}  // namespace fsl
