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

// Random well-typed diagrams for property tests.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "szx/diagram.hpp"
#include "szx/f2_matrix.hpp"

namespace szx::testing_support {

struct RandomDiagramOptions {
  std::size_t max_input = 4;
  std::size_t max_width = 5;
  std::size_t max_layers = 4;
  /// Phases restricted to multiples of pi/4, so that random pairs are
  /// sometimes equal.
  bool clifford_t_phases = true;
};

class DiagramSampler {
 public:
  explicit DiagramSampler(std::uint64_t seed, RandomDiagramOptions opts = {})
      : rng_(seed), opts_(opts) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  double angle() {
    if (opts_.clifford_t_phases) return static_cast<double>(uniform(0, 7)) * kPi / 4;
    return std::uniform_real_distribution<double>(0, 2 * kPi)(rng_);
  }

  PhaseVector angles(std::size_t n) {
    PhaseVector v(n);
    for (auto& a : v) a = angle();
    return v;
  }

  Colour colour() { return uniform(0, 1) ? Colour::Red : Colour::Green; }

  F2Matrix matrix(std::size_t rows, std::size_t cols) {
    F2Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) a.set(i, j, uniform(0, 1) == 1);
    }
    return a;
  }

  WireType type(std::size_t total) {
    std::vector<std::size_t> regs;
    while (total > 0) {
      regs.push_back(uniform(1, std::min<std::size_t>(total, 3)));
      total -= regs.back();
    }
    return WireType(regs);
  }

  Diagram diagram() { return diagram(type(uniform(0, opts_.max_input))); }

  Diagram diagram(const WireType& in) {
    Diagram d = identity_on(in);
    if (in.empty()) d = empty_diagram();
    const std::size_t layers = uniform(1, opts_.max_layers);
    for (std::size_t k = 0; k < layers; ++k) {
      for (int attempt = 0;; ++attempt) {
        const Diagram next = layer(d.out_type());
        if (next.out_type().size() <= opts_.max_width || attempt > 20) {
          d = seq(d, next);
          break;
        }
      }
    }
    return d;
  }

  /// A same-typed variant of d with one generator changed: a phase shifted,
  /// a spider recoloured, a matrix entry flipped or a Hadamard removed. The
  /// result may or may not be semantically equal to d.
  Diagram mutate(const Diagram& d) {
    std::vector<Path> sites;
    for_each_leaf(d, [&](const Path& p, const Diagram& leaf) {
      if (leaf.as<Spider>() || leaf.as<MatrixBox>() || leaf.as<Hadamard>()) {
        sites.push_back(p);
      }
    });
    if (sites.empty()) return seq(d, identity_on(d.out_type()));
    const Path at = sites[uniform(0, sites.size() - 1)];
    const Diagram& leaf = subtree_at(d, at);
    Diagram changed = leaf;
    if (const auto* s = leaf.as<Spider>()) {
      PhaseVector phases = s->phases;
      Colour c = s->colour;
      if (uniform(0, 1) == 0) {
        phases[uniform(0, phases.size() - 1)] += static_cast<double>(uniform(1, 7)) * kPi / 4;
      } else {
        c = other(c);
      }
      changed = spider(c, s->inputs, s->outputs, s->size, phases);
    } else if (const auto* m = leaf.as<MatrixBox>()) {
      F2Matrix a = m->matrix;
      const std::size_t i = uniform(0, a.rows() - 1), j = uniform(0, a.cols() - 1);
      a.set(i, j, !a.get(i, j));
      changed = m->forward ? matrix_box(a) : matrix_box_backward(a);
    } else {
      changed = identity_on(leaf.in_type());
    }
    return replace_at(d, at, changed);
  }

  /// One parallel layer consuming the registers of t.
  Diagram layer(const WireType& t) {
    const auto& regs = t.registers();
    std::vector<Diagram> parts;
    std::size_t i = 0;
    while (i < regs.size()) {
      const std::size_t n = regs[i];
      const bool pair = i + 1 < regs.size();
      const bool same = pair && regs[i + 1] == n;
      switch (uniform(0, 11)) {
        case 0:
          parts.push_back(hadamard(n));
          break;
        case 1:
        case 2:
          parts.push_back(spider(colour(), 1, uniform(0, 2), n, angles(n)));
          break;
        case 3:
          if (n > 1) {
            const std::size_t a = uniform(1, n - 1);
            parts.push_back(divider(a, n - a));
          } else {
            parts.push_back(identity(n));
          }
          break;
        case 4:
          if (pair) {
            parts.push_back(gatherer(n, regs[i + 1]));
            ++i;
          } else {
            parts.push_back(identity(n));
          }
          break;
        case 5:
          if (pair) {
            parts.push_back(swap(n, regs[i + 1]));
            ++i;
          } else {
            parts.push_back(hadamard(n));
          }
          break;
        case 6:
          parts.push_back(matrix_box(matrix(uniform(1, 3), n)));
          break;
        case 7:
          parts.push_back(matrix_box_backward(matrix(n, uniform(1, 3))));
          break;
        case 8:
          if (same) {
            parts.push_back(spider(colour(), 2, uniform(0, 2), n, angles(n)));
            ++i;
          } else {
            parts.push_back(identity(n));
          }
          break;
        case 9:
          if (same) {
            parts.push_back(cap(n));
            ++i;
          } else {
            parts.push_back(spider(colour(), 1, 1, n, angles(n)));
          }
          break;
        default:
          parts.push_back(identity(n));
          break;
      }
      ++i;
    }
    switch (uniform(0, 5)) {
      case 0:
        parts.push_back(cup(uniform(1, 2)));
        break;
      case 1: {
        const std::size_t n = uniform(1, 2);
        parts.push_back(spider(colour(), 0, 1, n, angles(n)));
        break;
      }
      default:
        break;
    }
    if (parts.empty()) return empty_diagram();
    return tensor(parts);
  }

 private:
  std::mt19937_64 rng_;
  RandomDiagramOptions opts_;
};

}  // namespace szx::testing_support
