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

#include <cstddef>
#include <vector>

#include "szx/diagram.hpp"
#include "szx/f2_matrix.hpp"
#include "szx/gadgets.hpp"

namespace szx {

/// The matrix as a size-one diagram on n -> m qubits: a green node per
/// column, a red node per row, an edge per 1 entry, and the scalar
/// sqrt(2)^{|A| - m}.
inline Diagram expand_matrix_core(const F2Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Diagram> columns;
  std::vector<std::pair<std::size_t, std::size_t>> column_major;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t degree = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (a.get(i, j)) {
        column_major.emplace_back(i, j);
        ++degree;
      }
    }
    columns.push_back(green(1, degree, 1, 0.0));
  }
  std::vector<Diagram> rows;
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t degree = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t k = 0; k < column_major.size(); ++k) {
        if (column_major[k] == std::pair{i, j}) perm.push_back(k);
      }
      ++degree;
    }
    rows.push_back(red(degree, 1, 1, 0.0));
  }
  const long correction =
      static_cast<long>(popcount(a)) - static_cast<long>(m);
  const Diagram first = tensor(columns);
  const Diagram routed =
      perm.empty() ? first
                   : seq(first, permutation(perm, WireType::qubits(perm.size())));
  Diagram core = seq(routed, tensor(rows));
  if (correction != 0) core = par(core, qubit_sqrt2_power(correction));
  return core;
}

/// The same bipartite graph with each row node fused into a chain of red
/// nodes, visited one column at a time. Semantically equal to
/// expand_matrix_core but never holds more than n + m + max column degree
/// wires at once.
inline Diagram expand_matrix_sequential(const F2Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Diagram> steps;
  steps.push_back(par(power(identity(1), n), power(red(0, 1, 1, 0.0), m)));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < m; ++i) {
      if (a.get(i, j)) hit.push_back(i);
    }
    const std::size_t d = hit.size();
    const std::size_t rest = n - j - 1;
    steps.push_back(par(green(1, d, 1, 0.0), power(identity(1), rest + m)));
    // Wires are now: d copies, the remaining columns, the m rows.
    std::vector<std::size_t> perm;
    std::vector<Diagram> merge;
    for (std::size_t k = 0; k < rest; ++k) perm.push_back(d + k);
    std::size_t copy = 0;
    for (std::size_t i = 0; i < m; ++i) {
      perm.push_back(d + rest + i);
      if (copy < d && hit[copy] == i) {
        perm.push_back(copy++);
        merge.push_back(red(2, 1, 1, 0.0));
      } else {
        merge.push_back(identity(1));
      }
    }
    if (d > 0) {
      steps.push_back(permutation(perm, WireType::qubits(perm.size())));
      steps.push_back(par(power(identity(1), rest), tensor(merge)));
    }
  }
  const long correction =
      static_cast<long>(popcount(a)) - static_cast<long>(m);
  Diagram core = compose(steps);
  if (correction != 0) core = par(core, qubit_sqrt2_power(correction));
  return core;
}

/// expand_matrix_core with its qubits gathered into registers 1_n -> 1_m.
inline Diagram expand_matrix(const F2Matrix& a) {
  return compose({split_many(std::vector<std::size_t>(a.cols(), 1)),
                  expand_matrix_core(a),
                  merge_many(std::vector<std::size_t>(a.rows(), 1))});
}

}  // namespace szx
