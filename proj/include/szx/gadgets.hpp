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

#include <cmath>
#include <complex>
#include <cstddef>

#include "szx/diagram.hpp"

namespace szx {

/// The closed diagram green(0,1) ; red(1,0) on n qubits, worth sqrt(2)^n.
inline Diagram bone(std::size_t n = 1) {
  return seq(green(0, 1, n, 0.0), red(1, 0, n, 0.0));
}

/// Worth (1/sqrt(2))^n: the phases pi/3 and -pi/3 make the two spiders
/// overlap with amplitude 1/sqrt(2) per qubit.
inline Diagram inverse_bone(std::size_t n = 1) {
  return seq(green(0, 1, n, kPi / 3), red(1, 0, n, -kPi / 3));
}

/// Scalar sqrt(2)^k for any integer k.
inline Diagram sqrt2_power(long k) {
  if (k == 0) return empty_diagram();
  if (k > 0) return bone(static_cast<std::size_t>(k));
  return inverse_bone(static_cast<std::size_t>(-k));
}

/// sqrt2_power(k) built from |k| size-one gadgets.
inline Diagram qubit_sqrt2_power(long k) {
  if (k == 0) return empty_diagram();
  const auto count = static_cast<std::size_t>(k > 0 ? k : -k);
  return power(k > 0 ? bone(1) : inverse_bone(1), count);
}

/// Scalar prod_i sqrt(2) e^{i gamma_i}.
inline Diagram phase_gadget(const PhaseVector& gamma) {
  const std::size_t n = gamma.size();
  return seq(green(0, 1, n, gamma), red(1, 0, n, kPi));
}

/// Angles of the Euler decomposition of a Hadamard followed by a green
/// alpha1 and a red alpha2 rotation.
struct EulerAngles {
  double x_plus;
  double x_minus;
  std::complex<double> z;
  std::complex<double> z_prime;
  double beta1;
  double beta2;
  double beta3;
  double gamma;
};

/// Moduli below this count as zero, so cos(pi/2) does not leak a spurious
/// argument into the result.
inline constexpr double kEulerZero = 1e-12;

inline EulerAngles euler_angles(double alpha1, double alpha2) {
  auto arg = [](std::complex<double> c) {
    return std::abs(c) <= kEulerZero ? 0.0 : std::arg(c);
  };
  EulerAngles e{};
  e.x_plus = (alpha1 + alpha2) / 2;
  e.x_minus = e.x_plus - alpha2;
  e.z = {-std::sin(e.x_plus), std::cos(e.x_minus)};
  e.z_prime = {std::cos(e.x_plus), -std::sin(e.x_minus)};
  e.beta1 = arg(e.z) + arg(e.z_prime);
  e.beta2 = std::abs(e.z_prime) <= kEulerZero
                ? 0.0
                : 2 * arg(std::complex<double>(std::abs(e.z / e.z_prime), 1));
  e.beta3 = arg(e.z) - arg(e.z_prime);
  e.gamma = e.x_plus - arg(e.z) + (kPi - e.beta2) / 2;
  return e;
}

/// Exchanges green and red on every spider.
inline Diagram colour_swap(const Diagram& d) {
  if (d.is_leaf()) {
    if (const auto* s = d.as<Spider>()) {
      Spider t = *s;
      t.colour = other(t.colour);
      return Diagram::leaf(t);
    }
    return d;
  }
  const Diagram a = colour_swap(d.child(0));
  const Diagram b = colour_swap(d.child(1));
  return d.kind() == Diagram::Kind::Seq ? seq(a, b) : par(a, b);
}

/// Replaces every size-one generator by its size-n version. Dividers,
/// gatherers and matrices have no such version.
inline Diagram lift(const Diagram& d, std::size_t n) {
  if (n == 0) throw ParameterError("lift size must be at least 1");
  if (!d.is_leaf()) {
    const Diagram a = lift(d.child(0), n);
    const Diagram b = lift(d.child(1), n);
    return d.kind() == Diagram::Kind::Seq ? seq(a, b) : par(a, b);
  }
  auto require_one = [](std::size_t size) {
    if (size != 1) throw ParameterError("only size-one generators lift");
  };
  return std::visit(
      overloaded{
          [&](const Spider& s) {
            require_one(s.size);
            return spider(s.colour, s.inputs, s.outputs, n,
                          PhaseVector(n, s.phases[0]));
          },
          [&](const Hadamard& h) {
            require_one(h.size);
            return hadamard(n);
          },
          [&](const Swap& s) {
            require_one(s.first);
            require_one(s.second);
            return swap(n, n);
          },
          [&](const Cup& c) {
            require_one(c.size);
            return cup(n);
          },
          [&](const Cap& c) {
            require_one(c.size);
            return cap(n);
          },
          [&](const Identity& i) {
            require_one(i.size);
            return identity(n);
          },
          [&](const EmptyScalar&) { return empty_diagram(); },
          [](const Divider&) -> Diagram {
            throw ParameterError("dividers have no lifted version");
          },
          [](const Gatherer&) -> Diagram {
            throw ParameterError("gatherers have no lifted version");
          },
          [](const MatrixBox&) -> Diagram {
            throw ParameterError("matrices have no lifted version");
          },
      },
      d.generator());
}

}  // namespace szx
