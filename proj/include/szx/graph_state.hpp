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

#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "szx/diagram.hpp"
#include "szx/f2_matrix.hpp"
#include "szx/gadgets.hpp"
#include "szx/graph.hpp"

namespace szx {

namespace detail {

inline Diagram qubit_ids(std::size_t k) { return power(identity(1), k); }

}  // namespace detail

/// Applies one single-qubit diagram per qubit of a register list.
inline Diagram qubitwise(const WireType& t, const std::vector<Diagram>& ops) {
  if (ops.size() != t.size()) {
    throw ParameterError("qubitwise needs one operation per qubit");
  }
  return compose({split_to_qubits(t), tensor(ops), merge_from_qubits(t)});
}

/// Bipartite graph state with biadjacency gamma (rows: the m vertices of the
/// second part, columns: the n vertices of the first). Type 0 -> 1_{n+m},
/// the first part on the leading qubits.
inline Diagram bipartite_graph_state(const F2Matrix& gamma) {
  const std::size_t m = gamma.rows();
  const std::size_t n = gamma.cols();
  const Diagram copies = seq(
      green(0, 2, n, 0.0),
      par(identity(n), seq(matrix_box(gamma), hadamard(m))));
  return seq(par(copies, inverse_bone(n)), gatherer(n, m));
}

namespace detail {

inline Diagram graph_state_box(const Graph& g,
                               const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  if (n == 1) return par(green(0, 1, 1, 0.0), inverse_bone(1));
  const std::size_t u = order[0];
  std::vector<std::size_t> rest(order.begin() + 1, order.end());
  std::stable_partition(rest.begin(), rest.end(),
                        [&](std::size_t v) { return g.has_edge(u, v); });
  const auto d = static_cast<std::size_t>(std::count_if(
      rest.begin(), rest.end(), [&](std::size_t v) { return g.has_edge(u, v); }));
  const Diagram sub = graph_state_box(g, rest);
  const std::size_t others = n - 1 - d;

  Diagram state = sub;
  std::vector<std::size_t> labels;
  if (d == 0) {
    state = par(sub, graph_state_box(g, {u}));
    labels = rest;
    labels.push_back(u);
  } else {
    if (others > 0) state = seq(state, divider(d, others));
    const Diagram parity =
        seq(matrix_box(F2Matrix::ones(1, d)), hadamard(1));
    state = seq(state, layer({green(1, 2, d, 0.0), others > 0
                                                     ? identity(others)
                                                     : empty_diagram()}));
    state = seq(state, layer({identity(d), parity,
                              others > 0 ? identity(others) : empty_diagram()}));
    labels.assign(rest.begin(), rest.begin() + static_cast<long>(d));
    labels.push_back(u);
    labels.insert(labels.end(), rest.begin() + static_cast<long>(d),
                  rest.end());
  }
  const WireType current = state.out_type();
  if (labels == order) return seq(state, rewire(current, WireType{n}));
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) {
    perm[k] = static_cast<std::size_t>(
        std::find(labels.begin(), labels.end(), order[k]) - labels.begin());
  }
  return compose({state, split_to_qubits(current),
                  permutation(perm, WireType::qubits(n)),
                  merge_many(std::vector<std::size_t>(n, 1))});
}

}  // namespace detail

/// Inductive graph state of type 0 -> 1_n: the first vertex is attached to
/// the state of the remaining graph, whose vertices are ordered with the
/// neighbourhood first.
inline Diagram graph_state_box(const Graph& g) {
  std::vector<std::size_t> order(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return detail::graph_state_box(g, order);
}

/// Graph state as a plain ZX diagram on size-one wires: a green node per
/// vertex and a Hadamard edge per graph edge. Type 0 -> n qubits.
inline Diagram graph_state_zx(const Graph& g) {
  const std::size_t n = g.order();
  const auto edges = g.edges();
  Diagram d = par(power(green(0, 1, 1, 0.0), n),
                  sqrt2_power(static_cast<long>(edges.size()) -
                              static_cast<long>(n)));
  for (auto [u, v] : edges) {
    d = seq(d, layer({detail::qubit_ids(u), green(1, 2, 1, 0.0),
                              detail::qubit_ids(n - u - 1)}));
    d = seq(d, layer({detail::qubit_ids(v + 1), green(1, 2, 1, 0.0),
                              detail::qubit_ids(n - v - 1)}));
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < n + 2; ++k) {
      if (k != u + 1 && k != v + 2) perm.push_back(k);
    }
    perm.push_back(u + 1);
    perm.push_back(v + 2);
    d = seq(d, permutation(perm, WireType::qubits(n + 2)));
    d = seq(d, par(detail::qubit_ids(n),
                   seq(par(hadamard(1), identity(1)), cap(1))));
  }
  return d;
}

/// Biadjacency matrix of the graph obtained by pivoting along the edge
/// between the first vertices of both parts (vertex 0 and vertex n).
inline F2Matrix pivot_biadjacency(const F2Matrix& gamma) {
  if (!gamma.get(0, 0)) {
    throw ParameterError("pivot needs gamma(1,1) = 1");
  }
  F2Matrix out = gamma;
  for (std::size_t i = 1; i < gamma.rows(); ++i) {
    for (std::size_t j = 1; j < gamma.cols(); ++j) {
      out.set(i, j, gamma.get(i, j) != (gamma.get(i, 0) && gamma.get(0, j)));
    }
  }
  return out;
}

/// Hadamards on the pivot vertices of a bipartite graph state equal the
/// pivoted state with both vertices exchanged.
inline Equation pivot_equation(const F2Matrix& gamma) {
  const F2Matrix pivoted = pivot_biadjacency(gamma);
  const std::size_t n = gamma.cols();
  const std::size_t m = gamma.rows();
  const WireType state{n + m};
  std::vector<Diagram> ops(n + m, identity(1));
  ops[0] = hadamard(1);
  ops[n] = hadamard(1);
  std::vector<std::size_t> perm(n + m);
  for (std::size_t k = 0; k < n + m; ++k) perm[k] = k;
  std::swap(perm[0], perm[n]);
  const Diagram exchange =
      compose({split_to_qubits(state), permutation(perm, WireType::qubits(n + m)),
               merge_from_qubits(state)});
  return {seq(bipartite_graph_state(gamma), qubitwise(state, ops)),
          seq(bipartite_graph_state(pivoted), exchange)};
}

/// X(-pi/2) on u and Z(pi/2) on its neighbours turn |G> into |G * u>.
inline Equation locomp_equation(const Graph& g, std::size_t u) {
  const std::size_t n = g.order();
  std::vector<Diagram> ops(n, identity(1));
  ops.at(u) = red(1, 1, 1, -kPi / 2);
  for (std::size_t v : g.neighbours(u)) ops[v] = green(1, 1, 1, kPi / 2);
  return {seq(graph_state_box(g), qubitwise(WireType{n}, ops)),
          graph_state_box(local_complement(g, u))};
}

/// X on u and Z on its neighbourhood, as phased spiders on the register.
inline Diagram stabilizer(const Graph& g, std::size_t u) {
  const std::size_t n = g.order();
  PhaseVector x(n, 0.0), z(n, 0.0);
  x.at(u) = kPi;
  for (std::size_t v : g.neighbours(u)) z[v] = kPi;
  return seq(red(1, 1, n, x), green(1, 1, n, z));
}

}  // namespace szx
