// Copyright 2026 The SZX Authors
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


// Command-line front end for the szx library.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "szx/cpc.hpp"
#include "szx/dot.hpp"
#include "szx/dsl.hpp"
#include "szx/graph_state.hpp"
#include "szx/normalize.hpp"
#include "szx/rewrite.hpp"
#include "szx/semantics.hpp"

namespace {

using json = nlohmann::json;
using namespace szx;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  double tol = kDefaultTolerance;
  std::size_t max_qubits = 14;
  bool json = false;

  InterpretOptions options() const {
    InterpretOptions o;
    o.max_qubits = max_qubits;
    return o;
  }
};

/// Input that cannot be read at all.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Diagram read_diagram(const std::string& path) {
  try {
    return parse_diagram(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

F2Matrix read_matrix(const std::string& path) {
  try {
    return F2Matrix::parse(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

void print_matrix(const SemanticsValue& v) {
  std::cout << v.in.to_string() << " -> " << v.out.to_string() << "\n";
  for (Eigen::Index r = 0; r < v.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < v.matrix.cols(); ++c) {
      const Complex z = v.matrix(r, c);
      std::cout << (c == 0 ? "" : "  ") << std::showpos << std::setprecision(6)
                << z.real() << z.imag() << "i" << std::noshowpos;
    }
    std::cout << "\n";
  }
}

int run_interpret(const Globals& g, const std::string& file) {
  const SemanticsValue v = interpret(read_diagram(file), g.options());
  if (g.json) {
    std::cout << to_json(v).dump() << "\n";
  } else {
    print_matrix(v);
  }
  return kOk;
}

int run_check_equal(const Globals& g, const std::string& f1,
                    const std::string& f2) {
  const bool equal =
      decide_equal(read_diagram(f1), read_diagram(f2), g.tol, g.options());
  if (g.json) {
    std::cout << json{{"equal", equal}}.dump() << "\n";
  } else {
    std::cout << (equal ? "equal" : "not equal") << "\n";
  }
  return equal ? kOk : kFailed;
}

int run_normalize(const Globals& g, const std::string& file) {
  const ExpandedForm f = to_expanded_form(read_diagram(file));
  if (g.json) {
    json steps = json::array();
    for (const NormalStep& s : f.trace) {
      steps.push_back({{"rule", s.rule},
                       {"path", path_to_string(s.path)},
                       {"measure_before", s.measure_before},
                       {"measure_after", s.measure_after}});
    }
    std::cout << json{{"delta", print_diagram(f.delta)},
                      {"core", print_diagram(f.core)},
                      {"gamma", print_diagram(f.gamma)},
                      {"trace", steps}}
                     .dump()
              << "\n";
  } else {
    std::cout << format_normal_trace(f.trace);
    std::cout << "delta: " << print_diagram(f.delta) << "\n"
              << "core: " << print_diagram(f.core) << "\n"
              << "gamma: " << print_diagram(f.gamma) << "\n";
  }
  return kOk;
}

int run_rewrite(const Globals& g, const std::string& file,
                const std::string& script) {
  const Diagram start = read_diagram(file);
  const std::vector<RewriteStep> steps = parse_script(read_file(script));
  std::vector<Diagram> states{start};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    try {
      states.push_back(apply_step(states.back(), steps[k]));
    } catch (const MatchError& e) {
      std::cerr << "step " << k + 1 << ": " << e.what() << "\n";
      if (g.json) {
        std::cout << json{{"applied", k}, {"error", e.what()}}.dump() << "\n";
      }
      return kFailed;
    }
  }
  if (g.json) {
    json out = json::array();
    for (const Diagram& d : states) out.push_back(print_diagram(d));
    std::cout << json{{"applied", steps.size()}, {"diagrams", out}}.dump()
              << "\n";
  } else {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      std::cout << format_step(k + 1, steps[k]) << "\n";
    }
    std::cout << "result: " << print_diagram(states.back()) << "\n";
  }
  return kOk;
}

/// Two-colouring of g by breadth-first search; empty if g has an odd cycle.
std::vector<int> two_colouring(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t u = queue[i];
      for (std::size_t v : g.neighbours(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return {};
        }
      }
    }
  }
  return side;
}

int run_graphstate(const Globals& g, const std::string& file, bool bipartite) {
  const Graph graph = Graph::parse(read_file(file));
  const std::size_t n = graph.order();
  std::vector<std::size_t> order;
  Diagram state = empty_diagram();
  if (bipartite) {
    const std::vector<int> side = two_colouring(graph);
    if (side.empty()) throw ParameterError("graph is not bipartite");
    std::vector<std::size_t> first, second;
    for (std::size_t v = 0; v < n; ++v) (side[v] == 0 ? first : second).push_back(v);
    F2Matrix gamma = F2Matrix::zeros(second.size(), first.size());
    for (std::size_t r = 0; r < second.size(); ++r) {
      for (std::size_t c = 0; c < first.size(); ++c) {
        if (graph.has_edge(second[r], first[c])) gamma.set(r, c, true);
      }
    }
    order = first;
    order.insert(order.end(), second.begin(), second.end());
    state = bipartite_graph_state(gamma);
  } else {
    for (std::size_t v = 0; v < n; ++v) order.push_back(v);
    state = graph_state_box(graph);
  }
  // Reference state with its qubits listed in `order`.
  std::vector<std::pair<std::size_t, std::size_t>> relabelled;
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
  for (auto [u, v] : graph.edges()) relabelled.emplace_back(position[u], position[v]);
  const Diagram reference =
      seq(graph_state_zx(Graph(n, relabelled)), merge_from_qubits(WireType{n}));
  const bool verified = equal_semantics(state, reference, g.tol, g.options());
  if (g.json) {
    std::cout << json{{"diagram", print_diagram(state)},
                      {"qubit_order", order},
                      {"verified", verified}}
                     .dump()
              << "\n";
  } else {
    std::cout << print_diagram(state) << "\n";
    std::cout << "qubit order:";
    for (std::size_t v : order) std::cout << " " << v;
    std::cout << "\n" << (verified ? "verified" : "mismatch") << "\n";
  }
  return verified ? kOk : kFailed;
}

std::vector<int> parse_bits(const std::string& s, const std::string& name) {
  std::vector<int> v;
  for (char ch : s) {
    if (ch != '0' && ch != '1') {
      throw ParameterError(name + " must be a string of 0 and 1, got '" + s + "'");
    }
    v.push_back(ch - '0');
  }
  return v;
}

std::string bits_string(const std::vector<int>& v) {
  std::string s;
  for (int b : v) s += static_cast<char>('0' + b);
  return s;
}

int run_cpc(const Globals& g, const std::vector<std::string>& files,
            bool isometry, const std::string& error) {
  const CpcCode k(read_matrix(files[0]), read_matrix(files[1]),
                  read_matrix(files[2]));
  if (isometry) {
    const bool ok = decide_equal(seq(cpc_encoder(k), cpc_decoder(k)),
                                 identity(k.b()), g.tol, g.options());
    if (g.json) {
      std::cout << json{{"isometry", ok}}.dump() << "\n";
    } else {
      std::cout << (ok ? "encoder is an isometry" : "encoder is not an isometry")
                << "\n";
    }
    return ok ? kOk : kFailed;
  }
  std::vector<std::string> parts;
  std::stringstream ss(error);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 3) throw ParameterError("--error expects x,y,z");
  const std::vector<int> x = parse_bits(parts[0], "x");
  const std::vector<int> y = parse_bits(parts[1], "y");
  const std::vector<int> z = parse_bits(parts[2], "z");
  bool all = true;
  json report = json::object();
  for (CpcErrorKind kind : {CpcErrorKind::Phase, CpcErrorKind::Bit}) {
    const bool phase = kind == CpcErrorKind::Phase;
    const CpcSyndromes s =
        phase ? phase_error_syndromes(k, x, y, z) : bit_error_syndromes(k, x, y, z);
    const Equation e = cpc_error_equation(k, kind, x, y, z);
    const bool ok = decide_equal(e.lhs, e.rhs, g.tol, g.options());
    all = all && ok;
    const std::string name = phase ? "phase" : "bit";
    report[name] = {{"syndrome", bits_string(s.syndrome)},
                    {"correction", bits_string(s.correction)},
                    {"verified", ok}};
    if (!g.json) {
      std::cout << name << " errors: syndrome " << bits_string(s.syndrome)
                << ", correction " << bits_string(s.correction) << ", "
                << (ok ? "verified" : "mismatch") << "\n";
    }
  }
  if (g.json) std::cout << report.dump() << "\n";
  return all ? kOk : kFailed;
}

int run_export_dot(const std::string& file) {
  std::cout << export_dot(read_diagram(file));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scalable ZX diagrams: interpret, compare, rewrite, construct"};
  app.require_subcommand(1, 1);
  Globals g;
  app.add_option("--tol", g.tol, "comparison tolerance")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-qubits", g.max_qubits, "cap on S(in) + S(out)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "machine-readable output");
  app.fallthrough();

  std::string file, file2, script, error;
  std::vector<std::string> cpc_files;
  bool bipartite = false, inductive = false, isometry = false;

  auto* interpret_cmd = app.add_subcommand("interpret", "print the matrix of a diagram");
  interpret_cmd->add_option("file", file)->required();
  auto* equal_cmd = app.add_subcommand("check-equal", "decide whether two diagrams are equal");
  equal_cmd->add_option("file1", file)->required();
  equal_cmd->add_option("file2", file2)->required();
  auto* normalize_cmd = app.add_subcommand("normalize", "expand a diagram to size-one generators");
  normalize_cmd->add_option("file", file)->required();
  auto* rewrite_cmd = app.add_subcommand("rewrite", "replay a derivation script");
  rewrite_cmd->add_option("file", file)->required();
  rewrite_cmd->add_option("--script", script, "derivation script")->required();
  auto* graph_cmd = app.add_subcommand("graphstate", "build and verify a graph state");
  graph_cmd->add_option("graphfile", file)->required();
  auto* bip = graph_cmd->add_flag("--bipartite", bipartite);
  auto* ind = graph_cmd->add_flag("--inductive", inductive);
  bip->excludes(ind);
  auto* cpc_cmd = app.add_subcommand("cpc", "check a tripartite code");
  cpc_cmd->add_option("files", cpc_files, "B, P and C matrix files")
      ->required()
      ->expected(3);
  auto* iso = cpc_cmd->add_flag("--verify-isometry", isometry);
  auto* err = cpc_cmd->add_option("--error", error, "error vectors x,y,z");
  iso->excludes(err);
  auto* dot_cmd = app.add_subcommand("export-dot", "write a Graphviz rendering");
  dot_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
    if (*graph_cmd && !bipartite && !inductive) {
      throw CLI::RequiredError("--bipartite or --inductive");
    }
    if (*cpc_cmd && !isometry && err->count() == 0) {
      throw CLI::RequiredError("--verify-isometry or --error");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*interpret_cmd) return run_interpret(g, file);
    if (*equal_cmd) return run_check_equal(g, file, file2);
    if (*normalize_cmd) return run_normalize(g, file);
    if (*rewrite_cmd) return run_rewrite(g, file, script);
    if (*graph_cmd) return run_graphstate(g, file, bipartite);
    if (*cpc_cmd) return run_cpc(g, cpc_files, isometry, error);
    if (*dot_cmd) return run_export_dot(file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
