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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "random_diagrams.hpp"
#include "szx/dsl.hpp"
#include "szx/diagram.hpp"
#include "szx/semantics.hpp"

namespace szx {
namespace {

const double kS = 1 / std::sqrt(2.0);

double distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

TEST(Interpret, Hadamard) {
  Eigen::MatrixXcd h(2, 2);
  h << kS, kS, kS, -kS;
  EXPECT_LE(distance(interpret(hadamard(1)).matrix, h), 1e-15);
}

TEST(Interpret, DividerIsIdentity) {
  const SemanticsValue v = interpret(divider(1, 1));
  EXPECT_EQ(v.in, WireType{2});
  EXPECT_EQ(v.out, (WireType{1, 1}));
  EXPECT_LE(distance(v.matrix, Eigen::MatrixXcd::Identity(4, 4)), 0);
}

TEST(Interpret, LeglessGreenSpiderIsTwo) {
  const SemanticsValue v = interpret(green(0, 0, 1, PhaseVector{0.0}));
  ASSERT_EQ(v.matrix.rows(), 1);
  ASSERT_EQ(v.matrix.cols(), 1);
  EXPECT_NEAR(std::abs(v.matrix(0, 0) - Complex(2)), 0, 1e-15);
}

TEST(Interpret, MatrixBoxCopiesBit) {
  const Eigen::MatrixXcd m =
      interpret(matrix_box(F2Matrix::from_rows({{1}, {1}}))).matrix;
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 2);
  expected(0, 0) = 1;
  expected(3, 1) = 1;
  EXPECT_LE(distance(m, expected), 0);
  const Eigen::MatrixXcd back =
      interpret(matrix_box_backward(F2Matrix::from_rows({{1}, {1}}))).matrix;
  EXPECT_LE(distance(back, expected.transpose()), 0);
}

TEST(Interpret, GreenAndRedPiDiffer) {
  const Diagram z = green(1, 1, 1, kPi);
  const Diagram x = red(1, 1, 1, kPi);
  EXPECT_FALSE(equal_semantics(z, x));
  Eigen::MatrixXcd zexp(2, 2), xexp(2, 2);
  zexp << 1, 0, 0, -1;
  xexp << 0, 1, 1, 0;
  EXPECT_LE(distance(interpret(z).matrix, zexp), 1e-12);
  EXPECT_LE(distance(interpret(x).matrix, xexp), 1e-12);
}

TEST(Interpret, GreenSpiderFormula) {
  const PhaseVector a{0.3, -1.1};
  const Eigen::MatrixXcd m = interpret(green(1, 2, 2, a)).matrix;
  ASSERT_EQ(m.rows(), 16);
  ASSERT_EQ(m.cols(), 4);
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 4; ++c) {
      Complex expected = 0;
      if (r == c * 4 + c) {
        expected = std::polar(1.0, ((c >> 1) & 1) * a[0] + (c & 1) * a[1]);
      }
      EXPECT_NEAR(std::abs(m(r, c) - expected), 0, 1e-14);
    }
  }
}

TEST(Interpret, CupAndCap) {
  const Eigen::VectorXcd cup_state = apply_state(cup(1), 0);
  ASSERT_EQ(cup_state.size(), 4);
  EXPECT_EQ(cup_state[0], Complex(1));
  EXPECT_EQ(cup_state[1], Complex(0));
  EXPECT_EQ(cup_state[2], Complex(0));
  EXPECT_EQ(cup_state[3], Complex(1));
  const Diagram snake = seq(par(identity(2), cup(2)), par(cap(2), identity(2)));
  EXPECT_TRUE(equal_semantics(snake, identity(2)));
  EXPECT_NEAR(std::abs(interpret(seq(cup(3), cap(3))).matrix(0, 0) - 8.0), 0,
              1e-12);
}

TEST(ApplyState, Columns) {
  const Eigen::VectorXcd e0 = apply_state(identity(1), 0);
  EXPECT_EQ(e0[0], Complex(1));
  EXPECT_EQ(e0[1], Complex(0));
  const Eigen::VectorXcd minus = apply_state(hadamard(1), 1);
  EXPECT_NEAR(std::abs(minus[0] - kS), 0, 1e-15);
  EXPECT_NEAR(std::abs(minus[1] + kS), 0, 1e-15);
  EXPECT_THROW(apply_state(hadamard(1), 2), ParameterError);
}

TEST(Interpret, ResourceCaps) {
  EXPECT_THROW(interpret(identity(8)), ResourceError);
  InterpretOptions wide;
  wide.max_qubits = 16;
  EXPECT_NO_THROW(interpret(identity(8), wide));
  InterpretOptions narrow;
  narrow.max_working_qubits = 3;
  EXPECT_THROW(interpret(seq(cup(2), cap(2)), narrow), ResourceError);
}

TEST(EqualSemantics, TypeMismatchIsAnError) {
  EXPECT_THROW(equal_semantics(identity(2), identity(1)), ComparisonError);
  EXPECT_THROW(equal_semantics(identity(2), divider(1, 1)), ComparisonError);
  EXPECT_TRUE(equal_semantics(hadamard(2), hadamard(2)));
}

TEST(SemanticsJson, Shape) {
  const nlohmann::json j = to_json(interpret(hadamard(1)));
  EXPECT_EQ(j["in"], nlohmann::json::array({1}));
  EXPECT_EQ(j["matrix"].size(), 2u);
  EXPECT_NEAR(j["matrix"][1][1][0].get<double>(), -kS, 1e-15);
}

// Random small diagram with the given boundary, built from a mix of
// generators. Used by the functoriality checks below.
Diagram random_box(std::mt19937_64& rng, std::size_t qubits) {
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: {
      PhaseVector a(qubits);
      for (auto& x : a) x = angle(rng);
      return green(1, 1, qubits, a);
    }
    case 1: {
      PhaseVector a(qubits);
      for (auto& x : a) x = angle(rng);
      return red(1, 1, qubits, a);
    }
    case 2:
      return hadamard(qubits);
    default:
      return matrix_box(oracle::random_matrix(rng, qubits, qubits));
  }
}

TEST(SemanticsProperty, InterchangeLaw) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 2, m = 1 + (trial / 2) % 3;
    const Diagram a = random_box(rng, n), b = random_box(rng, m);
    const Diagram c = random_box(rng, n), d = random_box(rng, m);
    EXPECT_TRUE(equal_semantics(seq(par(a, b), par(c, d)),
                                par(seq(a, c), seq(b, d))));
  }
}

TEST(SemanticsProperty, SeqIsMatrixProductParIsKronecker) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Diagram a = random_box(rng, 2), b = random_box(rng, 2);
    const Diagram c = random_box(rng, 1);
    const Eigen::MatrixXcd ma = interpret(a).matrix;
    const Eigen::MatrixXcd mb = interpret(b).matrix;
    const Eigen::MatrixXcd mc = interpret(c).matrix;
    EXPECT_LE(distance(interpret(seq(a, b)).matrix, mb * ma), 1e-12);
    Eigen::MatrixXcd kron(8, 8);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) kron.block(2 * i, 2 * j, 2, 2) = ma(i, j) * mc;
    }
    EXPECT_LE(distance(interpret(par(a, c)).matrix, kron), 1e-12);
  }
}

TEST(SemanticsProperty, RedIsHadamardConjugatedGreen) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  for (std::size_t k = 0; k <= 2; ++k) {
    for (std::size_t l = 0; l <= 2; ++l) {
      for (std::size_t n = 1; n <= 2; ++n) {
        PhaseVector a(n);
        for (auto& x : a) x = angle(rng);
        const Diagram lhs = red(k, l, n, a);
        const Diagram full = seq(seq(power(hadamard(n), k), green(k, l, n, a)),
                                 power(hadamard(n), l));
        EXPECT_TRUE(equal_semantics(lhs, full)) << k << l << n;
      }
    }
  }
}

TEST(SemanticsProperty, HadamardUnitaryAndSymmetric) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Eigen::MatrixXcd h = interpret(hadamard(n)).matrix;
    EXPECT_LE(distance(h, h.transpose()), 1e-14);
    EXPECT_LE(distance(h * h.adjoint(),
                       Eigen::MatrixXcd::Identity(h.rows(), h.cols())),
              1e-12);
  }
}

TEST(SemanticsProperty, BigSpiderIsMultiplexedSmallSpiders) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  for (Colour colour : {Colour::Green, Colour::Red}) {
    for (std::size_t k = 0; k <= 2; ++k) {
      for (std::size_t l = 0; l <= 2; ++l) {
        if (k + l == 0) continue;
        const std::size_t n = 2;
        PhaseVector a{angle(rng), angle(rng)};
        const Diagram big = spider(colour, k, l, n, a);
        // Split each leg into qubits, regroup by qubit, apply the small
        // spiders, regroup by leg and gather.
        std::vector<std::size_t> in_perm, out_perm;
        for (std::size_t q = 0; q < n; ++q) {
          for (std::size_t j = 0; j < k; ++j) in_perm.push_back(j * n + q);
        }
        for (std::size_t j = 0; j < l; ++j) {
          for (std::size_t q = 0; q < n; ++q) out_perm.push_back(q * l + j);
        }
        const Diagram small = par(spider(colour, k, l, 1, a[0]),
                                  spider(colour, k, l, 1, a[1]));
        std::vector<Diagram> chain;
        if (k > 0) {
          chain.push_back(split_to_qubits(WireType::repeated(k, n)));
          chain.push_back(permutation(in_perm, WireType::qubits(k * n)));
        }
        chain.push_back(small);
        if (l > 0) {
          chain.push_back(permutation(out_perm, WireType::qubits(l * n)));
          chain.push_back(merge_from_qubits(WireType::repeated(l, n)));
        }
        EXPECT_TRUE(equal_semantics(big, compose(chain)));
      }
    }
  }
}

}  // namespace
}  // namespace szx

namespace szx {
namespace {

// Checked through apply_state, which never reads a diagram upside down.
TEST(SemanticsProperty, TransposedDiagramHasTransposedMatrix) {
  testing_support::DiagramSampler sampler(41, {.clifford_t_phases = false});
  for (int t = 0; t < 100; ++t) {
    const Diagram d = sampler.diagram();
    const Diagram u = transposed(d);
    EXPECT_EQ(transposed(u), d);
    const std::size_t in = u.in_type().size();
    const Eigen::MatrixXcd m = interpret(d).matrix;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << in); ++c) {
      const Eigen::VectorXcd col = apply_state(u, c);
      ASSERT_LT((col - m.row(static_cast<Eigen::Index>(c)).transpose()).cwiseAbs().maxCoeff(),
                1e-9)
          << print_diagram(d);
    }
  }
}

}  // namespace
}  // namespace szx
