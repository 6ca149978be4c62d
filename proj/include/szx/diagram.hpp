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
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <numbers>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "szx/errors.hpp"
#include "szx/f2_matrix.hpp"

namespace szx {

// ---------------------------------------------------------------------------
// Wire types
// ---------------------------------------------------------------------------

/// An ordered list of register sizes, i.e. a formal sum 1_{n1} + 1_{n2} + ...
/// The empty list is the unit type 0.
class WireType {
 public:
  WireType() = default;
  WireType(std::initializer_list<std::size_t> registers)
      : WireType(std::vector<std::size_t>(registers)) {}
  explicit WireType(std::vector<std::size_t> registers)
      : registers_(std::move(registers)) {
    for (std::size_t r : registers_) {
      if (r == 0) throw ParameterError("register sizes must be positive");
    }
  }

  /// k copies of 1_n.
  static WireType repeated(std::size_t k, std::size_t n) {
    return WireType(std::vector<std::size_t>(k, n));
  }
  /// n wires of size one.
  static WireType qubits(std::size_t n) { return repeated(n, 1); }

  const std::vector<std::size_t>& registers() const { return registers_; }
  std::size_t count() const { return registers_.size(); }
  bool empty() const { return registers_.empty(); }
  std::size_t operator[](std::size_t i) const { return registers_[i]; }

  /// Total number of qubits carried.
  std::size_t size() const {
    return std::accumulate(registers_.begin(), registers_.end(),
                           std::size_t{0});
  }

  WireType operator+(const WireType& other) const {
    std::vector<std::size_t> r = registers_;
    r.insert(r.end(), other.registers_.begin(), other.registers_.end());
    return WireType(std::move(r));
  }

  bool operator==(const WireType&) const = default;

  /// "0", "1_2", "1_2+1_3".
  std::string to_string() const {
    if (registers_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < registers_.size(); ++i) {
      if (i != 0) s += "+";
      s += "1_" + std::to_string(registers_[i]);
    }
    return s;
  }

 private:
  std::vector<std::size_t> registers_;
};

inline std::ostream& operator<<(std::ostream& os, const WireType& t) {
  return os << t.to_string();
}

// ---------------------------------------------------------------------------
// Angles
// ---------------------------------------------------------------------------

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kAngleTolerance = 1e-9;

/// Equality of two angles modulo 2*pi.
inline bool angles_equal(double a, double b, double tol = kAngleTolerance) {
  double d = std::fmod(a - b, 2 * kPi);
  if (d < 0) d += 2 * kPi;
  return std::min(d, 2 * kPi - d) <= tol;
}

using PhaseVector = std::vector<double>;

inline bool phases_equal(const PhaseVector& a, const PhaseVector& b,
                         double tol = kAngleTolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!angles_equal(a[i], b[i], tol)) return false;
  }
  return true;
}

inline PhaseVector constant_phases(std::size_t n, double angle) {
  return PhaseVector(n, angle);
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

enum class Colour { Green, Red };

inline Colour other(Colour c) {
  return c == Colour::Green ? Colour::Red : Colour::Green;
}

inline const char* colour_name(Colour c) {
  return c == Colour::Green ? "green" : "red";
}

/// Spider with `inputs` legs in and `outputs` legs out, every leg of size
/// `size`, one phase per qubit of the register.
struct Spider {
  Colour colour;
  std::size_t inputs;
  std::size_t outputs;
  std::size_t size;
  PhaseVector phases;
};

struct Hadamard {
  std::size_t size;
};

/// 1_{first+second} -> 1_first + 1_second.
struct Divider {
  std::size_t first;
  std::size_t second;
};

/// 1_first + 1_second -> 1_{first+second}.
struct Gatherer {
  std::size_t first;
  std::size_t second;
};

/// 1_first + 1_second -> 1_second + 1_first.
struct Swap {
  std::size_t first;
  std::size_t second;
};

struct Cup {
  std::size_t size;
};

struct Cap {
  std::size_t size;
};

struct Identity {
  std::size_t size;
};

struct EmptyScalar {};

/// |x> -> |Ax> when forward (1_cols -> 1_rows); the transposed map
/// 1_rows -> 1_cols when backward.
struct MatrixBox {
  F2Matrix matrix;
  bool forward;
};

using Generator = std::variant<Spider, Hadamard, Divider, Gatherer, Swap, Cup,
                               Cap, Identity, EmptyScalar, MatrixBox>;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

inline std::pair<WireType, WireType> generator_type(const Generator& g) {
  return std::visit(
      overloaded{
          [](const Spider& s) {
            return std::pair{WireType::repeated(s.inputs, s.size),
                             WireType::repeated(s.outputs, s.size)};
          },
          [](const Hadamard& h) {
            return std::pair{WireType{h.size}, WireType{h.size}};
          },
          [](const Divider& d) {
            return std::pair{WireType{d.first + d.second},
                             WireType{d.first, d.second}};
          },
          [](const Gatherer& g) {
            return std::pair{WireType{g.first, g.second},
                             WireType{g.first + g.second}};
          },
          [](const Swap& s) {
            return std::pair{WireType{s.first, s.second},
                             WireType{s.second, s.first}};
          },
          [](const Cup& c) {
            return std::pair{WireType{}, WireType{c.size, c.size}};
          },
          [](const Cap& c) {
            return std::pair{WireType{c.size, c.size}, WireType{}};
          },
          [](const Identity& i) {
            return std::pair{WireType{i.size}, WireType{i.size}};
          },
          [](const EmptyScalar&) { return std::pair{WireType{}, WireType{}}; },
          [](const MatrixBox& m) {
            WireType cols{m.matrix.cols()};
            WireType rows{m.matrix.rows()};
            return m.forward ? std::pair{cols, rows} : std::pair{rows, cols};
          },
      },
      g);
}

inline void validate(const Generator& g) {
  auto positive = [](std::size_t v, const char* what) {
    if (v == 0) {
      throw ParameterError(std::string(what) + " must be at least 1");
    }
  };
  std::visit(overloaded{
                 [&](const Spider& s) {
                   positive(s.size, "spider size");
                   if (s.phases.size() != s.size) {
                     throw ParameterError(
                         "spider of size " + std::to_string(s.size) + " has " +
                         std::to_string(s.phases.size()) + " phases");
                   }
                 },
                 [&](const Hadamard& h) { positive(h.size, "Hadamard size"); },
                 [&](const Divider& d) {
                   positive(d.first, "divider part");
                   positive(d.second, "divider part");
                 },
                 [&](const Gatherer& g) {
                   positive(g.first, "gatherer part");
                   positive(g.second, "gatherer part");
                 },
                 [&](const Swap& s) {
                   positive(s.first, "swap size");
                   positive(s.second, "swap size");
                 },
                 [&](const Cup& c) { positive(c.size, "cup size"); },
                 [&](const Cap& c) { positive(c.size, "cap size"); },
                 [&](const Identity& i) { positive(i.size, "identity size"); },
                 [](const EmptyScalar&) {},
                 [](const MatrixBox&) {},
             },
             g);
}

bool generators_equal(const Generator& a, const Generator& b);

// ---------------------------------------------------------------------------
// Diagrams
// ---------------------------------------------------------------------------

/// Child index in a composition tree: 0 is the first/left operand.
using Path = std::vector<unsigned char>;

inline std::string path_to_string(const Path& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) s += '.';
    s += static_cast<char>('0' + p[i]);
  }
  return s;
}

inline Path path_from_string(const std::string& s) {
  Path p;
  if (s == "root" || s.empty()) return p;
  bool expect_digit = true;
  for (char ch : s) {
    if (expect_digit && (ch == '0' || ch == '1')) {
      p.push_back(static_cast<unsigned char>(ch - '0'));
      expect_digit = false;
    } else if (!expect_digit && ch == '.') {
      expect_digit = true;
    } else {
      throw ParameterError("malformed path '" + s + "'");
    }
  }
  if (expect_digit) throw ParameterError("malformed path '" + s + "'");
  return p;
}

/// Immutable SZX diagram: a leaf generator, or the sequential (first then
/// second) or parallel (left beside right) composite of two diagrams.
/// Copies share structure.
class Diagram {
 public:
  enum class Kind { Leaf, Seq, Par };

  static Diagram leaf(Generator g) {
    validate(g);
    auto [in, out] = generator_type(g);
    auto node = std::make_shared<Node>();
    node->kind = Kind::Leaf;
    node->generator = std::move(g);
    node->in = std::move(in);
    node->out = std::move(out);
    node->leaves = 1;
    return Diagram(std::move(node));
  }

  /// `first` followed by `second`; the boundary types must agree.
  static Diagram seq(const Diagram& first, const Diagram& second) {
    if (first.out_type() != second.in_type()) {
      throw CompositionError("cannot compose " + first.in_type().to_string() +
                             " -> " + first.out_type().to_string() +
                             " with " + second.in_type().to_string() + " -> " +
                             second.out_type().to_string() + ": " +
                             first.out_type().to_string() + " != " +
                             second.in_type().to_string());
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Seq;
    node->children = {first, second};
    node->in = first.in_type();
    node->out = second.out_type();
    node->leaves = first.leaf_count() + second.leaf_count();
    return Diagram(std::move(node));
  }

  static Diagram par(const Diagram& left, const Diagram& right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Par;
    node->children = {left, right};
    node->in = left.in_type() + right.in_type();
    node->out = left.out_type() + right.out_type();
    node->leaves = left.leaf_count() + right.leaf_count();
    return Diagram(std::move(node));
  }

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->kind == Kind::Leaf; }
  const Generator& generator() const {
    if (!is_leaf()) throw StructureError("not a leaf");
    return node_->generator;
  }
  const Diagram& child(std::size_t i) const {
    if (is_leaf()) throw StructureError("leaf has no children");
    return node_->children.at(i);
  }
  const WireType& in_type() const { return node_->in; }
  const WireType& out_type() const { return node_->out; }
  std::size_t leaf_count() const { return node_->leaves; }

  template <class G>
  const G* as() const {
    return is_leaf() ? std::get_if<G>(&node_->generator) : nullptr;
  }

  /// Structural equality; phases compared modulo 2*pi.
  bool operator==(const Diagram& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    if (in_type() != other.in_type() || out_type() != other.out_type()) {
      return false;
    }
    if (is_leaf()) return generators_equal(generator(), other.generator());
    return child(0) == other.child(0) && child(1) == other.child(1);
  }

 private:
  struct Node {
    Kind kind = Kind::Leaf;
    Generator generator = EmptyScalar{};
    std::vector<Diagram> children;
    WireType in;
    WireType out;
    std::size_t leaves = 0;
  };

  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline bool generators_equal(const Generator& a, const Generator& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const Spider& x) {
            const auto& y = std::get<Spider>(b);
            return x.colour == y.colour && x.inputs == y.inputs &&
                   x.outputs == y.outputs && x.size == y.size &&
                   phases_equal(x.phases, y.phases);
          },
          [&](const Hadamard& x) { return x.size == std::get<Hadamard>(b).size; },
          [&](const Divider& x) {
            const auto& y = std::get<Divider>(b);
            return x.first == y.first && x.second == y.second;
          },
          [&](const Gatherer& x) {
            const auto& y = std::get<Gatherer>(b);
            return x.first == y.first && x.second == y.second;
          },
          [&](const Swap& x) {
            const auto& y = std::get<Swap>(b);
            return x.first == y.first && x.second == y.second;
          },
          [&](const Cup& x) { return x.size == std::get<Cup>(b).size; },
          [&](const Cap& x) { return x.size == std::get<Cap>(b).size; },
          [&](const Identity& x) { return x.size == std::get<Identity>(b).size; },
          [](const EmptyScalar&) { return true; },
          [&](const MatrixBox& x) {
            const auto& y = std::get<MatrixBox>(b);
            return x.forward == y.forward && x.matrix == y.matrix;
          },
      },
      a);
}

inline Diagram seq(const Diagram& f, const Diagram& g) {
  return Diagram::seq(f, g);
}
inline Diagram par(const Diagram& f, const Diagram& g) {
  return Diagram::par(f, g);
}

// Generator shorthands.

inline Diagram spider(Colour c, std::size_t inputs, std::size_t outputs,
                      std::size_t size, PhaseVector phases) {
  return Diagram::leaf(Spider{c, inputs, outputs, size, std::move(phases)});
}

/// Constant-angle abbreviation; only defined for spiders with a leg.
inline Diagram spider(Colour c, std::size_t inputs, std::size_t outputs,
                      std::size_t size, double angle) {
  if (inputs + outputs == 0) {
    throw ParameterError(
        "a spider without legs needs an explicit phase vector");
  }
  return spider(c, inputs, outputs, size, constant_phases(size, angle));
}

inline Diagram green(std::size_t k, std::size_t l, std::size_t n,
                     PhaseVector phases) {
  return spider(Colour::Green, k, l, n, std::move(phases));
}
inline Diagram green(std::size_t k, std::size_t l, std::size_t n = 1,
                     double angle = 0.0) {
  return spider(Colour::Green, k, l, n, angle);
}
inline Diagram red(std::size_t k, std::size_t l, std::size_t n,
                   PhaseVector phases) {
  return spider(Colour::Red, k, l, n, std::move(phases));
}
inline Diagram red(std::size_t k, std::size_t l, std::size_t n = 1,
                   double angle = 0.0) {
  return spider(Colour::Red, k, l, n, angle);
}
inline Diagram hadamard(std::size_t n = 1) { return Diagram::leaf(Hadamard{n}); }
inline Diagram divider(std::size_t a, std::size_t b) {
  return Diagram::leaf(Divider{a, b});
}
inline Diagram gatherer(std::size_t a, std::size_t b) {
  return Diagram::leaf(Gatherer{a, b});
}
inline Diagram swap(std::size_t n = 1, std::size_t m = 1) {
  return Diagram::leaf(Swap{n, m});
}
inline Diagram cup(std::size_t n = 1) { return Diagram::leaf(Cup{n}); }
inline Diagram cap(std::size_t n = 1) { return Diagram::leaf(Cap{n}); }
inline Diagram identity(std::size_t n = 1) { return Diagram::leaf(Identity{n}); }
inline Diagram empty_diagram() { return Diagram::leaf(EmptyScalar{}); }
inline Diagram matrix_box(const F2Matrix& a) {
  return Diagram::leaf(MatrixBox{a, true});
}
inline Diagram matrix_box_backward(const F2Matrix& a) {
  return Diagram::leaf(MatrixBox{a, false});
}

/// Left-nested parallel composite; the empty list gives the empty diagram.
inline Diagram tensor(std::span<const Diagram> parts) {
  if (parts.empty()) return empty_diagram();
  Diagram d = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) d = par(d, parts[i]);
  return d;
}
inline Diagram tensor(std::initializer_list<Diagram> parts) {
  return tensor(std::span<const Diagram>(parts.begin(), parts.size()));
}

/// Tensor of the parts that are not the empty diagram.
inline Diagram layer(const std::vector<Diagram>& parts) {
  std::vector<Diagram> kept;
  for (const Diagram& p : parts) {
    if (!p.as<EmptyScalar>()) kept.push_back(p);
  }
  return tensor(kept);
}

/// Left-nested sequential composite of a non-empty list.
inline Diagram compose(std::span<const Diagram> parts) {
  if (parts.empty()) throw ParameterError("compose needs at least one diagram");
  Diagram d = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) d = seq(d, parts[i]);
  return d;
}
inline Diagram compose(std::initializer_list<Diagram> parts) {
  return compose(std::span<const Diagram>(parts.begin(), parts.size()));
}

/// d tensored with itself k times (empty diagram for k = 0).
inline Diagram power(const Diagram& d, std::size_t k) {
  std::vector<Diagram> parts(k, d);
  return tensor(parts);
}

/// Identity wires on every register of t.
inline Diagram identity_on(const WireType& t) {
  std::vector<Diagram> parts;
  for (std::size_t r : t.registers()) parts.push_back(identity(r));
  return tensor(parts);
}

/// Two diagrams of the same type claimed equal.
struct Equation {
  Diagram lhs;
  Diagram rhs;
};

// ---------------------------------------------------------------------------
// Canonical wiring
// ---------------------------------------------------------------------------

inline Diagram split(std::size_t a, std::size_t b) { return divider(a, b); }
inline Diagram merge(std::size_t a, std::size_t b) { return gatherer(a, b); }

/// 1_{sum parts} -> sum 1_{part}: cascade that peels off the first part.
inline Diagram split_many(std::span<const std::size_t> parts) {
  if (parts.empty()) throw ParameterError("split_many needs a part");
  for (std::size_t p : parts) {
    if (p == 0) throw ParameterError("split_many parts must be positive");
  }
  if (parts.size() == 1) return identity(parts[0]);
  const std::size_t rest =
      std::accumulate(parts.begin() + 1, parts.end(), std::size_t{0});
  const Diagram tail = split_many(parts.subspan(1));
  if (parts.size() == 2) return divider(parts[0], rest);
  return seq(divider(parts[0], rest), par(identity(parts[0]), tail));
}
inline Diagram split_many(const std::vector<std::size_t>& parts) {
  return split_many(std::span<const std::size_t>(parts));
}

/// Mirror of split_many.
inline Diagram merge_many(std::span<const std::size_t> parts) {
  if (parts.empty()) throw ParameterError("merge_many needs a part");
  for (std::size_t p : parts) {
    if (p == 0) throw ParameterError("merge_many parts must be positive");
  }
  if (parts.size() == 1) return identity(parts[0]);
  const std::size_t rest =
      std::accumulate(parts.begin() + 1, parts.end(), std::size_t{0});
  if (parts.size() == 2) return gatherer(parts[0], rest);
  return seq(par(identity(parts[0]), merge_many(parts.subspan(1))),
             gatherer(parts[0], rest));
}
inline Diagram merge_many(const std::vector<std::size_t>& parts) {
  return merge_many(std::span<const std::size_t>(parts));
}

/// Splits every register of t into single qubits.
inline Diagram split_to_qubits(const WireType& t) {
  std::vector<Diagram> parts;
  for (std::size_t r : t.registers()) {
    parts.push_back(split_many(std::vector<std::size_t>(r, 1)));
  }
  return tensor(parts);
}

/// Gathers single qubits back into the registers of t.
inline Diagram merge_from_qubits(const WireType& t) {
  std::vector<Diagram> parts;
  for (std::size_t r : t.registers()) {
    parts.push_back(merge_many(std::vector<std::size_t>(r, 1)));
  }
  return tensor(parts);
}

namespace detail {

inline bool all_identities(const Diagram& d) {
  if (d.is_leaf()) {
    return d.as<Identity>() != nullptr || d.as<EmptyScalar>() != nullptr;
  }
  return all_identities(d.child(0)) && all_identities(d.child(1));
}

}  // namespace detail

/// The canonical wire diagram a -> b: dividers down to the common refinement
/// of both register lists, then gatherers up to b.
inline Diagram rewire(const WireType& a, const WireType& b) {
  if (a.size() != b.size()) {
    throw ParameterError("rewire: sizes differ, " + a.to_string() + " has " +
                         std::to_string(a.size()) + " qubits, " +
                         b.to_string() + " has " + std::to_string(b.size()));
  }
  if (a.empty()) return empty_diagram();
  std::vector<std::size_t> cuts;
  std::size_t acc = 0;
  for (std::size_t r : a.registers()) cuts.push_back(acc += r);
  acc = 0;
  for (std::size_t r : b.registers()) cuts.push_back(acc += r);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto pieces_of = [&](const WireType& t) {
    std::size_t start = 0;
    std::size_t ci = 0;
    std::vector<std::vector<std::size_t>> all;
    for (std::size_t r : t.registers()) {
      std::vector<std::size_t> parts;
      std::size_t pos = start;
      while (ci < cuts.size() && cuts[ci] <= start) ++ci;
      while (ci < cuts.size() && cuts[ci] <= start + r) {
        parts.push_back(cuts[ci] - pos);
        pos = cuts[ci];
        ++ci;
      }
      start += r;
      all.push_back(std::move(parts));
    }
    return all;
  };
  std::vector<Diagram> delta;
  for (const auto& parts : pieces_of(a)) delta.push_back(split_many(parts));
  std::vector<Diagram> gamma;
  for (const auto& parts : pieces_of(b)) gamma.push_back(merge_many(parts));
  const Diagram d = tensor(delta);
  const Diagram g = tensor(gamma);
  if (detail::all_identities(g)) return d;
  if (detail::all_identities(d)) return g;
  return seq(d, g);
}

/// Register permutation on type a: output register k is input register
/// perm[k]. Built from adjacent swaps; the identity permutation gives
/// identity wires.
inline Diagram permutation(std::span<const std::size_t> perm,
                           const WireType& a) {
  const std::size_t n = a.count();
  if (perm.size() != n) {
    throw ParameterError("permutation length " + std::to_string(perm.size()) +
                         " does not match " + std::to_string(n) +
                         " registers");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw ParameterError("not a permutation");
    seen[p] = true;
  }
  std::vector<std::size_t> current(n);
  std::iota(current.begin(), current.end(), std::size_t{0});
  std::vector<Diagram> layers;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t j = k;
    while (current[j] != perm[k]) ++j;
    for (; j > k; --j) {
      std::vector<Diagram> layer;
      for (std::size_t i = 0; i < j - 1; ++i) {
        layer.push_back(identity(a[current[i]]));
      }
      layer.push_back(swap(a[current[j - 1]], a[current[j]]));
      for (std::size_t i = j + 1; i < n; ++i) {
        layer.push_back(identity(a[current[i]]));
      }
      layers.push_back(tensor(layer));
      std::swap(current[j - 1], current[j]);
    }
  }
  if (layers.empty()) return identity_on(a);
  return compose(layers);
}
inline Diagram permutation(const std::vector<std::size_t>& perm,
                           const WireType& a) {
  return permutation(std::span<const std::size_t>(perm), a);
}

// ---------------------------------------------------------------------------
// Tree access
// ---------------------------------------------------------------------------

inline const Diagram& subtree_at(const Diagram& d, const Path& path) {
  const Diagram* cur = &d;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->is_leaf()) {
      throw StructureError("path " + path_to_string(path) +
                           " runs past a leaf");
    }
    cur = &cur->child(path[i]);
  }
  return *cur;
}

/// Copy of d with the subtree at path replaced; parents are rebuilt so type
/// mismatches surface as CompositionError.
inline Diagram replace_at(const Diagram& d, const Path& path,
                          const Diagram& replacement, std::size_t depth = 0) {
  if (depth == path.size()) return replacement;
  if (d.is_leaf()) {
    throw StructureError("path " + path_to_string(path) + " runs past a leaf");
  }
  Diagram first = d.child(0);
  Diagram second = d.child(1);
  if (path[depth] == 0) {
    first = replace_at(first, path, replacement, depth + 1);
  } else {
    second = replace_at(second, path, replacement, depth + 1);
  }
  return d.kind() == Diagram::Kind::Seq ? seq(first, second)
                                        : par(first, second);
}

/// Calls f(path, leaf) for every leaf, left to right.
inline void for_each_leaf(
    const Diagram& d,
    const std::function<void(const Path&, const Diagram&)>& f) {
  Path path;
  std::function<void(const Diagram&)> walk = [&](const Diagram& node) {
    if (node.is_leaf()) {
      f(path, node);
      return;
    }
    for (unsigned char i = 0; i < 2; ++i) {
      path.push_back(i);
      walk(node.child(i));
      path.pop_back();
    }
  };
  walk(d);
}

/// Calls f(path, node) for every node in pre-order.
inline void for_each_node(
    const Diagram& d,
    const std::function<void(const Path&, const Diagram&)>& f) {
  Path path;
  std::function<void(const Diagram&)> walk = [&](const Diagram& node) {
    f(path, node);
    if (node.is_leaf()) return;
    for (unsigned char i = 0; i < 2; ++i) {
      path.push_back(i);
      walk(node.child(i));
      path.pop_back();
    }
  };
  walk(d);
}

/// The diagram read upside down: every generator is replaced by its
/// transpose, and sequential composites run in the opposite order.
inline Diagram transposed(const Diagram& d) {
  if (!d.is_leaf()) {
    const Diagram a = transposed(d.child(0));
    const Diagram b = transposed(d.child(1));
    return d.kind() == Diagram::Kind::Seq ? seq(b, a) : par(a, b);
  }
  return std::visit(
      overloaded{
          [](const Spider& s) {
            return Diagram::leaf(
                Spider{s.colour, s.outputs, s.inputs, s.size, s.phases});
          },
          [](const Divider& v) { return gatherer(v.first, v.second); },
          [](const Gatherer& g) { return divider(g.first, g.second); },
          [](const Swap& s) { return swap(s.second, s.first); },
          [](const Cup& c) { return cap(c.size); },
          [](const Cap& c) { return cup(c.size); },
          [](const MatrixBox& m) { return Diagram::leaf(MatrixBox{m.matrix, !m.forward}); },
          [&](const auto&) { return d; },
      },
      d.generator());
}

inline std::string generator_name(const Generator& g) {
  return std::visit(overloaded{
                        [](const Spider& s) {
                          return std::string(s.colour == Colour::Green
                                                 ? "green spider"
                                                 : "red spider");
                        },
                        [](const Hadamard&) { return std::string("Hadamard"); },
                        [](const Divider&) { return std::string("divider"); },
                        [](const Gatherer&) { return std::string("gatherer"); },
                        [](const Swap&) { return std::string("swap"); },
                        [](const Cup&) { return std::string("cup"); },
                        [](const Cap&) { return std::string("cap"); },
                        [](const Identity&) { return std::string("identity"); },
                        [](const EmptyScalar&) { return std::string("scalar"); },
                        [](const MatrixBox&) { return std::string("matrix"); },
                    },
                    g);
}

/// True when every leaf is a wire, divider or gatherer (the W fragment).
inline bool is_wire_only(const Diagram& d) {
  bool ok = true;
  for_each_leaf(d, [&](const Path&, const Diagram& leaf) {
    if (!leaf.as<Identity>() && !leaf.as<Divider>() && !leaf.as<Gatherer>() &&
        !leaf.as<EmptyScalar>()) {
      ok = false;
    }
  });
  return ok;
}

}  // namespace szx
