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

#include <string>
#include <vector>

#include "szx/diagram.hpp"
#include "szx/f2_matrix.hpp"
#include "szx/gadgets.hpp"

namespace szx {

/// A tripartite code encoding b logical qubits into a + b + c physical ones.
/// B is a x b, P is c x b and C is c x a.
struct CpcCode {
  F2Matrix B;
  F2Matrix P;
  F2Matrix C;

  CpcCode(F2Matrix b, F2Matrix p, F2Matrix c)
      : B(std::move(b)), P(std::move(p)), C(std::move(c)) {
    if (P.cols() != B.cols() || C.cols() != B.rows() || C.rows() != P.rows()) {
      throw ShapeError("CPC matrices must be B: a x b, P: c x b, C: c x a; got B " +
                       shape_string(B) + ", P " + shape_string(P) + ", C " +
                       shape_string(C));
    }
  }

  std::size_t a() const { return B.rows(); }
  std::size_t b() const { return B.cols(); }
  std::size_t c() const { return P.rows(); }
};

namespace cpc_detail {

inline PhaseVector pi_bits(const std::vector<int>& v) {
  PhaseVector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] ? kPi : 0.0;
  return p;
}

inline std::vector<int> bits(const F2Matrix& column) { return column.column_bits(); }

inline F2Matrix col(const std::vector<int>& v) { return F2Matrix::column(v); }

inline void check_length(const std::vector<int>& v, std::size_t n,
                         const char* name) {
  if (v.size() != n) {
    throw ParameterError(std::string("error vector ") + name + " needs " +
                         std::to_string(n) + " entries, got " +
                         std::to_string(v.size()));
  }
}

/// Phases placed on the decoder's spiders by propagated errors.
struct DecoderPhases {
  PhaseVector red_a;
  PhaseVector red_b;
  PhaseVector out;
  PhaseVector check;
};

/// The decoder with optional phases on its red splitters, on the green
/// node producing the output and on the green check node of the c part.
inline Diagram decoder(const CpcCode& k, const DecoderPhases& ph) {
  const std::size_t a = k.a(), b = k.b(), c = k.c();
  const WireType split_type({a, a, b, b, c});
  return par(compose({tensor({red(1, 2, a, ph.red_a), red(1, 2, b, ph.red_b),
                              identity(c)}),
                      permutation({2, 0, 1, 3, 4}, split_type),
                      tensor({identity(b), matrix_box_backward(k.B),
                              matrix_box_backward(transpose(k.C)),
                              matrix_box_backward(transpose(k.P)), identity(c)}),
                      tensor({green(2, 1, b, ph.out), green(3, 0, c, ph.check)})}),
             sqrt2_power(static_cast<long>(a + b) - static_cast<long>(c)));
}

inline DecoderPhases zero_phases(const CpcCode& k) {
  return {PhaseVector(k.a(), 0.0), PhaseVector(k.b(), 0.0),
          PhaseVector(k.b(), 0.0), PhaseVector(k.c(), 0.0)};
}

}  // namespace cpc_detail

/// E : 1_b -> 1_a + 1_b + 1_c. The logical register y is copied; one copy
/// passes through B. A green state w on c is copied three times; two copies
/// pass through C^t and P^t. Red nodes add By + C^t w on a and y + P^t w on b,
/// and w itself is the c output.
inline Diagram cpc_encoder(const CpcCode& k) {
  const std::size_t a = k.a(), b = k.b(), c = k.c();
  const WireType routed_type({b, a, a, b, c});
  return par(compose({par(green(1, 2, b, 0.0), green(0, 3, c, 0.0)),
                      tensor({identity(b), matrix_box(k.B),
                              matrix_box(transpose(k.C)),
                              matrix_box(transpose(k.P)), identity(c)}),
                      permutation({1, 2, 0, 3, 4}, routed_type),
                      tensor({red(2, 1, a, 0.0), red(2, 1, b, 0.0),
                              identity(c)})}),
             sqrt2_power(static_cast<long>(a + b) - static_cast<long>(c)));
}

/// D : 1_a + 1_b + 1_c -> 1_b, the encoder read upside down.
inline Diagram cpc_decoder(const CpcCode& k) {
  return cpc_detail::decoder(k, cpc_detail::zero_phases(k));
}

struct CpcSyndromes {
  std::vector<int> syndrome;    ///< lands on the check node (phase errors)
                                ///< or on the a splitter (bit errors)
  std::vector<int> correction;  ///< what reaches the logical output
};

/// Green pi errors x, y, z on the three parts: the check node on c sees
/// z + Cx + Py and the output picks up y + B^t x.
inline CpcSyndromes phase_error_syndromes(const CpcCode& k,
                                          const std::vector<int>& x,
                                          const std::vector<int>& y,
                                          const std::vector<int>& z) {
  using namespace cpc_detail;
  check_length(x, k.a(), "x");
  check_length(y, k.b(), "y");
  check_length(z, k.c(), "z");
  return {bits(col(z) + k.C * col(x) + k.P * col(y)),
          bits(col(y) + transpose(k.B) * col(x))};
}

/// Red pi errors x', y', z': the a splitter sees x' + By' + C^t z' + B P^t z'
/// and the output is flipped by y' + P^t z'.
inline CpcSyndromes bit_error_syndromes(const CpcCode& k,
                                        const std::vector<int>& x,
                                        const std::vector<int>& y,
                                        const std::vector<int>& z) {
  using namespace cpc_detail;
  check_length(x, k.a(), "x'");
  check_length(y, k.b(), "y'");
  check_length(z, k.c(), "z'");
  const F2Matrix pz = transpose(k.P) * col(z);
  return {bits(col(x) + k.B * col(y) + transpose(k.C) * col(z) + k.B * pz),
          bits(col(y) + pz)};
}

enum class CpcErrorKind { Phase, Bit };

/// Errors followed by the decoder, against the decoder carrying the
/// syndromes on its internal spiders.
inline Equation cpc_error_equation(const CpcCode& k, CpcErrorKind kind,
                                   const std::vector<int>& x,
                                   const std::vector<int>& y,
                                   const std::vector<int>& z) {
  using namespace cpc_detail;
  const Colour colour = kind == CpcErrorKind::Phase ? Colour::Green : Colour::Red;
  const CpcSyndromes s = kind == CpcErrorKind::Phase
                             ? phase_error_syndromes(k, x, y, z)
                             : bit_error_syndromes(k, x, y, z);
  const Diagram errors = tensor({spider(colour, 1, 1, k.a(), pi_bits(x)),
                                 spider(colour, 1, 1, k.b(), pi_bits(y)),
                                 spider(colour, 1, 1, k.c(), pi_bits(z))});
  DecoderPhases ph = zero_phases(k);
  if (kind == CpcErrorKind::Phase) {
    ph.out = pi_bits(s.correction);
    ph.check = pi_bits(s.syndrome);
    return {seq(errors, cpc_decoder(k)), decoder(k, ph)};
  }
  ph.red_a = pi_bits(s.syndrome);
  return {seq(errors, cpc_decoder(k)),
          seq(decoder(k, ph), red(1, 1, k.b(), pi_bits(s.correction)))};
}

}  // namespace szx
