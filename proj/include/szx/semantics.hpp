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
#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "szx/diagram.hpp"
#include "szx/errors.hpp"

namespace szx {

using Complex = std::complex<double>;

/// Interpretation of a diagram: a 2^{S(out)} x 2^{S(in)} matrix together
/// with the boundary types. Basis index bits follow register order, the
/// leftmost register holding the most significant bits.
struct SemanticsValue {
  Eigen::MatrixXcd matrix;
  WireType in;
  WireType out;
};

struct InterpretOptions {
  /// Cap on S(in) + S(out).
  std::size_t max_qubits = 14;
  /// Cap on the open wires of any intermediate slice plus S(in).
  std::size_t max_working_qubits = 22;
};

inline constexpr double kDefaultTolerance = 1e-9;

namespace detail {

/// Sparse local operator: triples (input bits, output bits, amplitude).
struct LocalOp {
  std::size_t in_bits = 0;
  std::size_t out_bits = 0;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, Complex>> entries;
};

inline std::uint64_t repeat_block(std::uint64_t x, std::size_t n,
                                  std::size_t times) {
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < times; ++j) v = (v << n) | x;
  return v;
}

inline LocalOp green_op(std::size_t k, std::size_t l, std::size_t n,
                        const PhaseVector& phases) {
  LocalOp op{k * n, l * n, {}};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    double angle = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((x >> (n - 1 - i)) & 1U) angle += phases[i];
    }
    op.entries.emplace_back(repeat_block(x, n, k), repeat_block(x, n, l),
                            std::polar(1.0, angle));
  }
  return op;
}

inline LocalOp hadamard_op() {
  const double s = 1 / std::sqrt(2.0);
  return {1, 1, {{0, 0, s}, {0, 1, s}, {1, 0, s}, {1, 1, -s}}};
}

inline LocalOp swap_op(std::size_t n, std::size_t m) {
  LocalOp op{n + m, n + m, {}};
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
      op.entries.emplace_back((a << m) | b, (b << n) | a, Complex(1));
    }
  }
  return op;
}

inline LocalOp cup_op(std::size_t n, bool is_cap) {
  LocalOp op{is_cap ? 2 * n : 0, is_cap ? 0 : 2 * n, {}};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const std::uint64_t xx = (x << n) | x;
    if (is_cap) {
      op.entries.emplace_back(xx, 0, Complex(1));
    } else {
      op.entries.emplace_back(0, xx, Complex(1));
    }
  }
  return op;
}

inline LocalOp matrix_op(const F2Matrix& a, bool forward) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  LocalOp op{forward ? n : m, forward ? m : n, {}};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const std::uint64_t y = apply_to_index(a, x);
    if (forward) {
      op.entries.emplace_back(x, y, Complex(1));
    } else {
      op.entries.emplace_back(y, x, Complex(1));
    }
  }
  return op;
}

/// Runs a diagram over a batch of input vectors. The state holds
/// 2^width rows by `columns` columns, columns innermost.
class Simulator {
 public:
  Simulator(std::vector<Complex> state, std::size_t width,
            std::size_t column_bits, const InterpretOptions& options)
      : state_(std::move(state)),
        width_(width),
        column_bits_(column_bits),
        options_(options) {}

  void run(const Diagram& d, std::size_t offset) {
    if (is_closed(d)) {
      Simulator inner({Complex(1)}, 0, 0, options_);
      inner.run_open(d, 0);
      const Complex z = inner.state_[0];
      for (Complex& v : state_) v *= z;
      return;
    }
    run_open(d, offset);
  }

  void run_open(const Diagram& d, std::size_t offset) {
    switch (d.kind()) {
      case Diagram::Kind::Seq:
        run(d.child(0), offset);
        run(d.child(1), offset);
        return;
      case Diagram::Kind::Par:
        if (right_first(d)) {
          run(d.child(1), offset + d.child(0).in_type().size());
          run(d.child(0), offset);
        } else {
          run(d.child(0), offset);
          run(d.child(1), offset + d.child(0).out_type().size());
        }
        return;
      case Diagram::Kind::Leaf:
        leaf(d.generator(), offset);
        return;
    }
    throw StructureError("unknown diagram node");
  }

  /// Scalars are evaluated on their own instead of widening the state.
  static bool is_closed(const Diagram& d) {
    return !d.is_leaf() && d.in_type().empty() && d.out_type().empty();
  }

  /// Parallel parts commute; the one that frees wires runs first.
  static bool right_first(const Diagram& d) {
    auto growth = [](const Diagram& x) {
      return static_cast<long>(x.out_type().size()) -
             static_cast<long>(x.in_type().size());
    };
    return growth(d.child(1)) < growth(d.child(0));
  }

  std::vector<Complex>& state() { return state_; }
  std::size_t width() const { return width_; }

 private:
  void leaf(const Generator& g, std::size_t offset) {
    std::visit(
        overloaded{
            [&](const Spider& s) {
              if (s.colour == Colour::Red) {
                for (std::size_t q = 0; q < s.inputs * s.size; ++q) {
                  apply(hadamard_op(), offset + q);
                }
              }
              apply(green_op(s.inputs, s.outputs, s.size, s.phases), offset);
              if (s.colour == Colour::Red) {
                for (std::size_t q = 0; q < s.outputs * s.size; ++q) {
                  apply(hadamard_op(), offset + q);
                }
              }
            },
            [&](const Hadamard& h) {
              for (std::size_t q = 0; q < h.size; ++q) {
                apply(hadamard_op(), offset + q);
              }
            },
            [](const Divider&) {},
            [](const Gatherer&) {},
            [](const Identity&) {},
            [](const EmptyScalar&) {},
            [&](const Swap& s) { apply(swap_op(s.first, s.second), offset); },
            [&](const Cup& c) { apply(cup_op(c.size, false), offset); },
            [&](const Cap& c) { apply(cup_op(c.size, true), offset); },
            [&](const MatrixBox& m) {
              apply(matrix_op(m.matrix, m.forward), offset);
            },
        },
        g);
  }

  void apply(const LocalOp& op, std::size_t offset) {
    if (offset + op.in_bits > width_) {
      throw StructureError("operator runs past the open wires");
    }
    const std::size_t new_width = width_ - op.in_bits + op.out_bits;
    if (new_width + column_bits_ > options_.max_working_qubits) {
      throw ResourceError("intermediate slice needs " +
                          std::to_string(new_width + column_bits_) +
                          " qubits, cap is " +
                          std::to_string(options_.max_working_qubits));
    }
    const std::size_t low = width_ - offset - op.in_bits;
    const std::size_t block = std::size_t{1} << (low + column_bits_);
    std::vector<Complex>& next = scratch_;
    next.assign(std::size_t{1} << (new_width + column_bits_), Complex(0));
    for (std::uint64_t hi = 0; hi < (std::uint64_t{1} << offset); ++hi) {
      for (const auto& [x, y, amp] : op.entries) {
        const std::size_t src = ((hi << op.in_bits) | x) * block;
        const std::size_t dst = ((hi << op.out_bits) | y) * block;
        const Complex* from = state_.data() + src;
        Complex* to = next.data() + dst;
        if (amp == Complex(1)) {
          for (std::size_t i = 0; i < block; ++i) to[i] += from[i];
        } else {
          for (std::size_t i = 0; i < block; ++i) to[i] += amp * from[i];
        }
      }
    }
    state_.swap(next);
    width_ = new_width;
  }

  std::vector<Complex> state_;
  std::vector<Complex> scratch_;
  std::size_t width_;
  std::size_t column_bits_;
  InterpretOptions options_;
};

/// Largest number of open wires while running d from `width` wires.
inline std::size_t peak_width(const Diagram& d, std::size_t& width) {
  if (Simulator::is_closed(d)) {
    std::size_t inner = 0;
    const std::size_t a = peak_width(d.child(0), inner);
    const std::size_t b = peak_width(d.child(1), inner);
    return std::max({width, a, b});
  }
  if (!d.is_leaf()) {
    const bool swap = d.kind() == Diagram::Kind::Par && Simulator::right_first(d);
    const std::size_t a = peak_width(d.child(swap ? 1 : 0), width);
    const std::size_t b = peak_width(d.child(swap ? 0 : 1), width);
    return std::max(a, b);
  }
  const std::size_t before = width;
  width = width - d.in_type().size() + d.out_type().size();
  return std::max(before, width);
}

inline void check_cap(const Diagram& d, const InterpretOptions& options) {
  const std::size_t q = d.in_type().size() + d.out_type().size();
  if (q > options.max_qubits) {
    throw ResourceError("diagram " + d.in_type().to_string() + " -> " +
                        d.out_type().to_string() + " needs " +
                        std::to_string(q) + " qubits, cap is " +
                        std::to_string(options.max_qubits));
  }
}

}  // namespace detail

/// The interpretation of d as a dense matrix. Diagrams with more inputs than
/// outputs are simulated upside down, which keeps the working set smaller.
inline SemanticsValue interpret(const Diagram& d,
                                const InterpretOptions& options = {}) {
  detail::check_cap(d, options);
  const std::size_t in = d.in_type().size();
  const std::size_t out = d.out_type().size();
  if (out < in) {
    SemanticsValue t = interpret(transposed(d), options);
    return {t.matrix.transpose(), d.in_type(), d.out_type()};
  }
  std::size_t width = in;
  const std::size_t peak = detail::peak_width(d, width);
  if (peak > options.max_working_qubits) {
    throw ResourceError("intermediate slice needs " + std::to_string(peak) +
                        " qubits, cap is " +
                        std::to_string(options.max_working_qubits));
  }
  // Input columns are simulated together, in batches small enough for the
  // widest intermediate slice to fit the working cap.
  const std::size_t column_bits = std::min(in, options.max_working_qubits - peak);
  const std::size_t dim_in = std::size_t{1} << in;
  const std::size_t columns = std::size_t{1} << column_bits;
  const std::size_t dim_out = std::size_t{1} << out;
  SemanticsValue v{Eigen::MatrixXcd(dim_out, dim_in), d.in_type(),
                   d.out_type()};
  for (std::size_t first = 0; first < dim_in; first += columns) {
    std::vector<Complex> state(dim_in * columns);
    for (std::size_t c = 0; c < columns; ++c) state[(first + c) * columns + c] = 1;
    detail::Simulator sim(std::move(state), in, column_bits, options);
    sim.run(d, 0);
    const auto& s = sim.state();
    for (std::size_t r = 0; r < dim_out; ++r) {
      for (std::size_t c = 0; c < columns; ++c) {
        v.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(first + c)) =
            s[r * columns + c];
      }
    }
  }
  return v;
}

/// Column basis_index of the interpretation, computed without building the
/// full matrix.
inline Eigen::VectorXcd apply_state(const Diagram& d, std::uint64_t basis_index,
                                    const InterpretOptions& options = {}) {
  const std::size_t in = d.in_type().size();
  if (in >= 64 || basis_index >= (std::uint64_t{1} << in)) {
    throw ParameterError("basis index " + std::to_string(basis_index) +
                         " out of range for " + d.in_type().to_string());
  }
  if (d.out_type().size() > options.max_working_qubits) {
    throw ResourceError("output of " + std::to_string(d.out_type().size()) +
                        " qubits exceeds the cap");
  }
  std::vector<Complex> state(std::size_t{1} << in);
  state[basis_index] = 1;
  detail::Simulator sim(std::move(state), in, 0, options);
  sim.run(d, 0);
  const auto& s = sim.state();
  return Eigen::Map<const Eigen::VectorXcd>(s.data(),
                                            static_cast<Eigen::Index>(s.size()));
}

/// Largest entrywise absolute difference.
inline double max_difference(const SemanticsValue& a, const SemanticsValue& b) {
  if (a.in != b.in || a.out != b.out) {
    throw ComparisonError("cannot compare " + a.in.to_string() + " -> " +
                          a.out.to_string() + " with " + b.in.to_string() +
                          " -> " + b.out.to_string());
  }
  return (a.matrix - b.matrix).cwiseAbs().maxCoeff();
}

/// Scalar-exact semantic equality within an absolute tolerance.
inline bool equal_semantics(const Diagram& d1, const Diagram& d2,
                            double tol = kDefaultTolerance,
                            const InterpretOptions& options = {}) {
  if (d1.in_type() != d2.in_type() || d1.out_type() != d2.out_type()) {
    throw ComparisonError("cannot compare " + d1.in_type().to_string() +
                          " -> " + d1.out_type().to_string() + " with " +
                          d2.in_type().to_string() + " -> " +
                          d2.out_type().to_string());
  }
  return max_difference(interpret(d1, options), interpret(d2, options)) <= tol;
}

inline nlohmann::json to_json(const SemanticsValue& v) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < v.matrix.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < v.matrix.cols(); ++c) {
      row.push_back({v.matrix(r, c).real(), v.matrix(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return {{"in", v.in.registers()},
          {"out", v.out.registers()},
          {"matrix", std::move(rows)}};
}

}  // namespace szx
