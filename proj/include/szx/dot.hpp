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

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "szx/diagram.hpp"

namespace szx {

namespace dot_detail {

class Builder {
 public:
  struct Ports {
    std::vector<std::size_t> in;
    std::vector<std::size_t> out;
  };

  std::size_t node(const std::string& attrs) {
    nodes_.push_back(attrs);
    return nodes_.size() - 1;
  }

  std::size_t stub(std::size_t size, long owner = -1) {
    parent_.push_back(parent_.size());
    size_.push_back(size);
    owners_.emplace_back();
    if (owner >= 0) owners_.back().push_back(static_cast<std::size_t>(owner));
    return parent_.size() - 1;
  }

  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[b] = a;
    owners_[a].insert(owners_[a].end(), owners_[b].begin(), owners_[b].end());
    owners_[b].clear();
  }

  Ports build(const Diagram& d) {
    if (!d.is_leaf()) {
      Ports f = build(d.child(0));
      Ports g = build(d.child(1));
      if (d.kind() == Diagram::Kind::Seq) {
        for (std::size_t i = 0; i < f.out.size(); ++i) join(f.out[i], g.in[i]);
        return {f.in, g.out};
      }
      f.in.insert(f.in.end(), g.in.begin(), g.in.end());
      f.out.insert(f.out.end(), g.out.begin(), g.out.end());
      return f;
    }
    const auto& in = d.in_type().registers();
    const auto& out = d.out_type().registers();
    if (d.as<Identity>()) {
      const std::size_t s = stub(in[0]);
      return {{s}, {s}};
    }
    if (d.as<Swap>()) {
      const std::size_t a = stub(in[0]), b = stub(in[1]);
      return {{a, b}, {b, a}};
    }
    if (d.as<Cup>()) {
      const std::size_t s = stub(out[0]);
      return {{}, {s, s}};
    }
    if (d.as<Cap>()) {
      const std::size_t s = stub(in[0]);
      return {{s, s}, {}};
    }
    if (d.as<EmptyScalar>()) return {};
    const auto id = static_cast<long>(node(style(d)));
    Ports p;
    for (std::size_t r : in) p.in.push_back(stub(r, id));
    for (std::size_t r : out) p.out.push_back(stub(r, id));
    return p;
  }

  std::string render(const Diagram& d) {
    const Ports p = build(d);
    for (std::size_t i = 0; i < p.in.size(); ++i) {
      owners_[find(p.in[i])].push_back(node("label=\"in" + std::to_string(i) +
                                            "\", shape=plaintext"));
    }
    for (std::size_t i = 0; i < p.out.size(); ++i) {
      owners_[find(p.out[i])].push_back(node("label=\"out" + std::to_string(i) +
                                             "\", shape=plaintext"));
    }
    std::ostringstream os;
    os << "graph szx {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      os << "  n" << i << " [" << nodes_[i] << "];\n";
    }
    for (std::size_t s = 0; s < parent_.size(); ++s) {
      if (find(s) != s || owners_[s].empty()) continue;
      const auto& ends = owners_[s];
      std::string label = size_[s] > 1 ? " [label=\"" + std::to_string(size_[s]) + "\"]" : "";
      for (std::size_t k = 1; k < ends.size(); ++k) {
        os << "  n" << ends[k - 1] << " -- n" << ends[k] << label << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }

 private:
  std::size_t find(std::size_t s) {
    while (parent_[s] != s) s = parent_[s] = parent_[parent_[s]];
    return s;
  }

  static std::string phases_label(const PhaseVector& phases) {
    bool zero = true;
    for (double a : phases) zero = zero && angles_equal(a, 0.0);
    if (zero) return "";
    std::string s;
    for (std::size_t i = 0; i < phases.size(); ++i) {
      if (i != 0) s += ",";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4g", phases[i]);
      s += buf;
    }
    return s;
  }

  static std::string style(const Diagram& leaf) {
    return std::visit(
        overloaded{
            [](const Spider& s) {
              return std::string("label=\"") + phases_label(s.phases) +
                     "\", shape=circle, style=filled, fillcolor=" +
                     (s.colour == Colour::Green ? "green" : "red");
            },
            [](const Hadamard&) {
              return std::string("label=\"\", shape=square, style=filled, "
                                 "fillcolor=yellow, width=0.2");
            },
            [](const Divider& v) {
              return "label=\"" + std::to_string(v.first) + "|" +
                     std::to_string(v.second) + "\", shape=triangle";
            },
            [](const Gatherer& g) {
              return "label=\"" + std::to_string(g.first) + "|" +
                     std::to_string(g.second) + "\", shape=invtriangle";
            },
            [](const MatrixBox& m) {
              return "label=\"" + std::string(m.forward ? "" : "back ") +
                     m.matrix.to_compact() + "\", shape=box";
            },
            [](const auto&) { return std::string("shape=point"); },
        },
        leaf.generator());
  }

  std::vector<std::string> nodes_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::vector<std::size_t>> owners_;
};

}  // namespace dot_detail

/// Graphviz rendering: spiders as coloured circles, Hadamards as yellow
/// squares, dividers and gatherers as triangles, matrices as labelled boxes.
/// Edges carry the register size when it exceeds one.
inline std::string export_dot(const Diagram& d) {
  return dot_detail::Builder().render(d);
}

}  // namespace szx
