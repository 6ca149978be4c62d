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
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "szx/errors.hpp"

namespace szx {

/// Simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  explicit Graph(std::size_t order)
      : order_(order), adjacency_(order, std::vector<char>(order, 0)) {
    if (order == 0) throw ParameterError("a graph needs at least one vertex");
  }

  Graph(std::size_t order,
        const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Graph whose edges are the set bits of mask, in the order
  /// (0,1), (0,2), ..., (1,2), ...
  static Graph from_mask(std::size_t order, std::uint64_t mask) {
    Graph g(order);
    std::size_t bit = 0;
    for (std::size_t u = 0; u < order; ++u) {
      for (std::size_t v = u + 1; v < order; ++v, ++bit) {
        if ((mask >> bit) & 1U) g.add_edge(u, v);
      }
    }
    return g;
  }

  /// First line: order. Then one "u v" edge per line.
  static Graph parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::size_t order = 0;
    bool have_order = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> edge_lines;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream fields(line);
      if (!have_order) {
        long long n = 0;
        if (!(fields >> n) || n <= 0) {
          throw ParseError("expected a positive vertex count", line_no, 1);
        }
        order = static_cast<std::size_t>(n);
        have_order = true;
        continue;
      }
      long long u = 0, v = 0;
      if (!(fields >> u >> v) || u < 0 || v < 0) {
        throw ParseError("expected an edge 'u v'", line_no, 1);
      }
      edges.emplace_back(static_cast<std::size_t>(u),
                         static_cast<std::size_t>(v));
      edge_lines.push_back(line_no);
    }
    if (!have_order) throw ParseError("empty graph file", line_no + 1, 1);
    Graph g(order);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [u, v] = edges[i];
      if (u >= order || v >= order || u == v) {
        throw ParseError("invalid edge " + std::to_string(u) + " " +
                             std::to_string(v),
                         edge_lines[i], 1);
      }
      g.add_edge(u, v);
    }
    return g;
  }

  std::size_t order() const { return order_; }

  bool has_edge(std::size_t u, std::size_t v) const {
    check(u);
    check(v);
    return adjacency_[u][v] != 0;
  }

  void add_edge(std::size_t u, std::size_t v) {
    check(u);
    check(v);
    if (u == v) throw ParameterError("self-loops are not allowed");
    adjacency_[u][v] = adjacency_[v][u] = 1;
  }

  void remove_edge(std::size_t u, std::size_t v) {
    check(u);
    check(v);
    adjacency_[u][v] = adjacency_[v][u] = 0;
  }

  void toggle_edge(std::size_t u, std::size_t v) {
    if (has_edge(u, v)) {
      remove_edge(u, v);
    } else {
      add_edge(u, v);
    }
  }

  std::vector<std::size_t> neighbours(std::size_t u) const {
    check(u);
    std::vector<std::size_t> n;
    for (std::size_t v = 0; v < order_; ++v) {
      if (adjacency_[u][v]) n.push_back(v);
    }
    return n;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < order_; ++u) {
      for (std::size_t v = u + 1; v < order_; ++v) {
        if (adjacency_[u][v]) e.emplace_back(u, v);
      }
    }
    return e;
  }

  bool operator==(const Graph&) const = default;

  std::string to_string() const {
    std::string s = std::to_string(order_) + "\n";
    for (auto [u, v] : edges()) {
      s += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return s;
  }

 private:
  void check(std::size_t u) const {
    if (u >= order_) {
      throw ParameterError("vertex " + std::to_string(u) + " out of range");
    }
  }

  std::size_t order_;
  std::vector<std::vector<char>> adjacency_;
};

/// G * u: complements the edges inside the neighbourhood of u.
inline Graph local_complement(const Graph& g, std::size_t u) {
  Graph h = g;
  const auto n = g.neighbours(u);
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = i + 1; j < n.size(); ++j) h.toggle_edge(n[i], n[j]);
  }
  return h;
}

/// G ^ uv = G * u * v * u for an edge uv.
inline Graph pivot(const Graph& g, std::size_t u, std::size_t v) {
  if (!g.has_edge(u, v)) {
    throw ParameterError("pivot needs an edge, " + std::to_string(u) + " and " +
                         std::to_string(v) + " are not adjacent");
  }
  return local_complement(local_complement(local_complement(g, u), v), u);
}

}  // namespace szx
