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

#include "fslouvain/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string_view>

#include "fslouvain/error.hpp"
#include "json.hpp"

namespace fsl::io {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& source, std::size_t line,
                              const std::string& msg) {
  throw Error(Errc::kParse, source + ":" + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_int(const std::string& s, long long& out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e;
}

double need_double(const std::string& s, const std::string& source,
                   std::size_t line, const char* what) {
  double v;
  if (!parse_double(s, v)) {
    parse_error(source, line, std::string("invalid ") + what + " '" + s + "'");
  }
  return v;
}

long long need_int(const std::string& s, const std::string& source,
                   std::size_t line, const char* what) {
  long long v;
  if (!parse_int(s, v)) {
    parse_error(source, line, std::string("invalid ") + what + " '" + s + "'");
  }
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open " + path.string());
  return in;
}

// Reads the next line that is not blank; returns false at EOF.
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno,
                       bool skip_comments) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    if (skip_comments && t.front() == '#') continue;
    line = std::string(t);
    return true;
  }
  return false;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
std::vector<T> dense_from_nodes(const std::map<long long, T>& by_node,
                                const std::string& source) {
  std::vector<T> out;
  out.reserve(by_node.size());
  long long expect = 0;
  for (const auto& [node, v] : by_node) {
    if (node != expect) {
      throw Error(Errc::kParse, source + ": node ids must be 0.." +
                                    std::to_string(by_node.size() - 1) +
                                    ", missing " + std::to_string(expect));
    }
    out.push_back(v);
    ++expect;
  }
  return out;
}

}  // namespace

WeightedGraph read_edge_list(std::istream& in, const std::string& source,
                             std::size_t min_nodes) {
  std::vector<WeightedEdge> edges;
  std::size_t declared = 0;
  std::size_t max_id = 0;
  bool any = false;
  std::string line;
  std::size_t lineno = 0;
  while (next_content_line(in, line, lineno, false)) {
    if (line.front() == '#') {
      const auto tok = split_ws(std::string_view(line).substr(1));
      if (tok.size() == 2 && tok[0] == "nodes") {
        declared = static_cast<std::size_t>(
            need_int(tok[1], source, lineno, "node count"));
      }
      continue;
    }
    const auto tok = split_ws(line);
    if (tok.size() != 2 && tok.size() != 3) {
      parse_error(source, lineno, "expected 'u v [w]'");
    }
    const long long u = need_int(tok[0], source, lineno, "node id");
    const long long v = need_int(tok[1], source, lineno, "node id");
    if (u < 0 || v < 0) parse_error(source, lineno, "node ids must be >= 0");
    const double w =
        tok.size() == 3 ? need_double(tok[2], source, lineno, "weight") : 1.0;
    if (w < 0.0) parse_error(source, lineno, "weights must be nonnegative");
    edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), w});
    max_id = std::max({max_id, static_cast<std::size_t>(u),
                       static_cast<std::size_t>(v)});
    any = true;
  }
  std::size_t n = std::max(declared, min_nodes);
  if (any) {
    if (declared != 0 && max_id >= declared) {
      throw Error(Errc::kParse, source + ": node id " + std::to_string(max_id) +
                                    " exceeds declared node count " +
                                    std::to_string(declared));
    }
    n = std::max(n, max_id + 1);
  }
  return graph_from_edges(n, edges);
}

WeightedGraph read_edge_list(const std::filesystem::path& path,
                             std::size_t min_nodes) {
  auto in = open(path);
  return read_edge_list(in, path.string(), min_nodes);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  out << "# nodes " << g.size() << '\n';
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u; v < g.size(); ++v) {
      const double w = g.weight(u, v);
      if (w == 0.0) continue;
      out << u << ' ' << v;
      if (w != 1.0) out << ' ' << format_double(w);
      out << '\n';
    }
  }
}

std::map<long long, long long> read_partition_map(std::istream& in,
                                                  const std::string& source) {
  std::map<long long, long long> m;
  std::string line;
  std::size_t lineno = 0;
  while (next_content_line(in, line, lineno, true)) {
    const auto tok = split_ws(line);
    if (tok.size() != 2) parse_error(source, lineno, "expected 'node community'");
    const long long node = need_int(tok[0], source, lineno, "node id");
    const long long comm = need_int(tok[1], source, lineno, "community id");
    if (!m.emplace(node, comm).second) {
      parse_error(source, lineno, "node " + tok[0] + " listed twice");
    }
  }
  return m;
}

std::map<long long, long long> read_partition_map(
    const std::filesystem::path& path) {
  auto in = open(path);
  return read_partition_map(in, path.string());
}

Partition partition_from_map(const std::map<long long, long long>& m) {
  const std::vector<long long> raw = dense_from_nodes(m, "partition");
  std::map<long long, std::size_t> ids;
  std::vector<std::size_t> labels;
  labels.reserve(raw.size());
  for (long long c : raw) {
    labels.push_back(ids.emplace(c, ids.size()).first->second);
  }
  return Partition(labels);
}

void write_partition(std::ostream& out, const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << i << ' ' << p.community_of(i) << '\n';
  }
}

LabelDictionary read_labels(std::istream& in, const std::string& source) {
  LabelDictionary dict;
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno, true)) {
    throw Error(Errc::kParse, source + ": empty label file");
  }
  if (split_csv(line) != std::vector<std::string>{"label", "a", "b", "c", "d"}) {
    parse_error(source, lineno, "header must be 'label,a,b,c,d'");
  }
  while (next_content_line(in, line, lineno, true)) {
    const auto f = split_csv(line);
    if (f.size() != 5) parse_error(source, lineno, "expected 5 fields");
    try {
      const TrapezoidalFuzzySet fs(need_double(f[1], source, lineno, "a"),
                                   need_double(f[2], source, lineno, "b"),
                                   need_double(f[3], source, lineno, "c"),
                                   need_double(f[4], source, lineno, "d"));
      if (!dict.emplace(f[0], fs).second) {
        parse_error(source, lineno, "label '" + f[0] + "' defined twice");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::kParse) throw;
      parse_error(source, lineno, e.what());
    }
  }
  return dict;
}

LabelDictionary read_labels(const std::filesystem::path& path) {
  auto in = open(path);
  return read_labels(in, path.string());
}

FuzzyVector read_fuzzy_vector(std::istream& in, const std::string& source,
                              const LabelDictionary* labels) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno, true)) {
    throw Error(Errc::kParse, source + ": empty fuzzy vector file");
  }
  const auto header = split_csv(line);
  const bool by_label = header == std::vector<std::string>{"node", "label"};
  if (!by_label &&
      header != std::vector<std::string>{"node", "a", "b", "c", "d"}) {
    parse_error(source, lineno, "header must be 'node,a,b,c,d' or 'node,label'");
  }
  if (by_label && labels == nullptr) {
    parse_error(source, lineno, "'node,label' rows need a label dictionary");
  }
  std::map<long long, TrapezoidalFuzzySet> by_node;
  while (next_content_line(in, line, lineno, true)) {
    const auto f = split_csv(line);
    if (f.size() != header.size()) {
      parse_error(source, lineno,
                  "expected " + std::to_string(header.size()) + " fields");
    }
    const long long node = need_int(f[0], source, lineno, "node id");
    if (node < 0) parse_error(source, lineno, "node ids must be >= 0");
    std::optional<TrapezoidalFuzzySet> fs;
    if (by_label) {
      const auto it = labels->find(f[1]);
      if (it == labels->end()) {
        parse_error(source, lineno, "unknown label '" + f[1] + "'");
      }
      fs = it->second;
    } else {
      try {
        fs.emplace(need_double(f[1], source, lineno, "a"),
                   need_double(f[2], source, lineno, "b"),
                   need_double(f[3], source, lineno, "c"),
                   need_double(f[4], source, lineno, "d"));
      } catch (const Error& e) {
        if (e.code() == Errc::kParse) throw;
        parse_error(source, lineno, e.what());
      }
    }
    if (!by_node.emplace(node, *fs).second) {
      parse_error(source, lineno, "node " + f[0] + " listed twice");
    }
  }
  if (by_node.empty()) throw Error(Errc::kParse, source + ": no rows");
  return dense_from_nodes(by_node, source);
}

FuzzyVector read_fuzzy_vector(const std::filesystem::path& path,
                              const LabelDictionary* labels) {
  auto in = open(path);
  return read_fuzzy_vector(in, path.string(), labels);
}

std::vector<std::vector<double>> read_vectors(std::istream& in,
                                              const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno, true)) {
    throw Error(Errc::kParse, source + ": empty vectors file");
  }
  const auto header = split_csv(line);
  if (header.empty() || header[0] != "characteristic" || header.size() < 2) {
    parse_error(source, lineno,
                "header must be 'characteristic,0,1,...,n-1'");
  }
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i] != std::to_string(i - 1)) {
      parse_error(source, lineno, "header node ids must be 0..n-1 in order");
    }
  }
  const std::size_t n = header.size() - 1;
  std::vector<std::vector<double>> rows;
  while (next_content_line(in, line, lineno, true)) {
    const auto f = split_csv(line);
    if (f.size() != n + 1) {
      parse_error(source, lineno, "expected " + std::to_string(n + 1) + " fields");
    }
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = need_double(f[i + 1], source, lineno, "value");
      if (!(row[i] > 0.0)) {
        parse_error(source, lineno, "defuzzified values must be positive");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::kParse, source + ": no characteristic rows");
  return rows;
}

std::vector<std::vector<double>> read_vectors(const std::filesystem::path& path) {
  auto in = open(path);
  return read_vectors(in, path.string());
}

void write_vectors(std::ostream& out,
                   const std::vector<std::vector<double>>& vectors) {
  const std::size_t n = vectors.empty() ? 0 : vectors.front().size();
  out << "characteristic";
  for (std::size_t i = 0; i < n; ++i) out << ',' << i;
  out << '\n';
  for (std::size_t l = 0; l < vectors.size(); ++l) {
    out << l + 1;
    for (double v : vectors[l]) out << ',' << format_double(v);
    out << '\n';
  }
}

WeightedGraph read_matrix_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno, true)) {
    throw Error(Errc::kParse, source + ": empty matrix file");
  }
  const auto header = split_csv(line);
  if (header.empty() || header[0] != "node") {
    parse_error(source, lineno, "header must be 'node,0,1,...,n-1'");
  }
  const std::size_t n = header.size() - 1;
  std::vector<double> w;
  w.reserve(n * n);
  std::size_t row = 0;
  while (next_content_line(in, line, lineno, true)) {
    const auto f = split_csv(line);
    if (f.size() != n + 1) {
      parse_error(source, lineno, "expected " + std::to_string(n + 1) + " fields");
    }
    if (f[0] != std::to_string(row)) {
      parse_error(source, lineno, "expected row for node " + std::to_string(row));
    }
    for (std::size_t j = 0; j < n; ++j) {
      w.push_back(need_double(f[j + 1], source, lineno, "weight"));
    }
    ++row;
  }
  if (row != n) {
    throw Error(Errc::kParse, source + ": expected " + std::to_string(n) +
                                  " rows, got " + std::to_string(row));
  }
  try {
    return WeightedGraph(n, std::move(w));
  } catch (const Error& e) {
    throw Error(Errc::kParse, source + ": " + e.what());
  }
}

void write_matrix_csv(std::ostream& out, const WeightedGraph& g) {
  out << "node";
  for (std::size_t j = 0; j < g.size(); ++j) out << ',' << j;
  out << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << i;
    for (double v : g.row(i)) out << ',' << format_double(v);
    out << '\n';
  }
}

std::string spec_to_json(const BenchmarkSpec& spec) {
  json j;
  j["model"] = spec.model;
  j["network"] = spec.network;
  j["case"] = spec.case_id;
  j["n"] = spec.n;
  j["adjacency_sizes"] = spec.adjacency_sizes;
  j["synergy_sizes"] = spec.synergy_sizes;
  j["alpha"] = spec.edges.alpha;
  j["beta"] = spec.edges.beta;
  j["a"] = spec.shape.a;
  j["b"] = spec.shape.b;
  j["c"] = spec.shape.c;
  j["d"] = spec.shape.d;
  j["seed"] = spec.seed;
  return j.dump(2) + "\n";
}

BenchmarkSpec spec_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    BenchmarkSpec s;
    s.model = j.at("model").get<int>();
    s.network = j.at("network").get<int>();
    s.case_id = j.at("case").get<int>();
    s.n = j.at("n").get<std::size_t>();
    s.adjacency_sizes = j.at("adjacency_sizes").get<std::vector<std::size_t>>();
    s.synergy_sizes = j.at("synergy_sizes").get<std::vector<std::size_t>>();
    s.edges = {j.at("alpha").get<double>(), j.at("beta").get<double>()};
    s.shape = {j.at("a").get<double>(), j.at("b").get<double>(),
               j.at("c").get<double>(), j.at("d").get<double>()};
    s.seed = j.at("seed").get<std::uint64_t>();
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::kParse, std::string("benchmark spec: ") + e.what());
  }
}

void write_bundle(const std::filesystem::path& dir, const BenchmarkInstance& inst) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::kIo, "cannot create " + dir.string() + ": " + ec.message());
  auto write = [&](const char* name, auto&& body) {
    std::ofstream out(dir / name);
    if (!out) throw Error(Errc::kIo, "cannot write " + (dir / name).string());
    body(out);
    if (!out) throw Error(Errc::kIo, "write failed for " + (dir / name).string());
  };
  write("adjacency.edges", [&](std::ostream& o) { write_edge_list(o, inst.adjacency); });
  write("vectors.csv", [&](std::ostream& o) { write_vectors(o, inst.vectors); });
  write("truth_A.part", [&](std::ostream& o) { write_partition(o, inst.truth_adjacency); });
  write("truth_F.part", [&](std::ostream& o) { write_partition(o, inst.truth_synergy); });
  write("spec.json", [&](std::ostream& o) { o << spec_to_json(inst.spec); });
}

std::string read_text(const std::filesystem::path& path) {
  auto in = open(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace fsl::io
