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
#include "szx/gadgets.hpp"
#include "szx/graph_state.hpp"
#include "szx/semantics.hpp"

namespace szx {
namespace {

Complex scalar_of(const Diagram& d) {
  const SemanticsValue v = interpret(d);
  EXPECT_EQ(v.matrix.rows(), 1);
  return v.matrix(0, 0);
}

TEST(Gadgets, ScalarValues) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const double r = std::pow(std::sqrt(2.0), static_cast<double>(n));
    EXPECT_NEAR(std::abs(scalar_of(bone(n)) - r), 0, 1e-12);
    EXPECT_NEAR(std::abs(scalar_of(inverse_bone(n)) - 1 / r), 0, 1e-12);
  }
  EXPECT_NEAR(std::abs(scalar_of(sqrt2_power(-3)) - std::pow(2, -1.5)), 0, 1e-12);
  EXPECT_NEAR(std::abs(scalar_of(sqrt2_power(0)) - 1.0), 0, 0);
  const Complex g = scalar_of(phase_gadget({0.7, -0.2}));
  EXPECT_NEAR(std::abs(g - 2.0 * std::polar(1.0, 0.5)), 0, 1e-12);
}

TEST(Gadgets, EulerAnglesAtZero) {
  const EulerAngles e = euler_angles(0, 0);
  EXPECT_NEAR(std::abs(e.z - Complex(0, 1)), 0, 1e-15);
  EXPECT_NEAR(std::abs(e.z_prime - Complex(1, 0)), 0, 1e-15);
  EXPECT_NEAR(e.beta1, kPi / 2, 1e-15);
  EXPECT_NEAR(e.beta2, kPi / 2, 1e-15);
  EXPECT_NEAR(e.beta3, kPi / 2, 1e-15);
  EXPECT_NEAR(e.gamma, -kPi / 4, 1e-15);
}

TEST(Gadgets, EulerDegenerateDenominator) {
  // alpha1 = alpha2 = pi/2 gives x+ = pi/2, x- = 0, so z' = 0.
  const EulerAngles e = euler_angles(kPi / 2, kPi / 2);
  EXPECT_NEAR(std::abs(e.z_prime), 0, 1e-15);
  EXPECT_EQ(e.beta2, 0.0);
}

TEST(Gadgets, ColourSwapConjugatesByHadamard) {
  const Diagram d = seq(green(1, 2, 1, 0.3), par(red(1, 1, 1, 1.2), identity(1)));
  const Diagram conj = compose({hadamard(1), d, power(hadamard(1), 2)});
  EXPECT_TRUE(equal_semantics(colour_swap(d), conj));
}

TEST(Gadgets, LiftMatchesSizedGenerators) {
  const Diagram d = seq(par(green(1, 2, 1, 0.4), hadamard(1)),
                        par(identity(1), swap(1, 1)));
  const Diagram big = lift(d, 3);
  EXPECT_EQ(big, seq(par(green(1, 2, 3, 0.4), hadamard(3)),
                     par(identity(3), swap(3, 3))));
  EXPECT_THROW(lift(divider(1, 1), 2), ParameterError);
}

Eigen::VectorXcd state_of(const Diagram& d) { return apply_state(d, 0); }

double distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

TEST(GraphStates, SingleEdgeBipartite) {
  const Eigen::VectorXcd psi =
      state_of(bipartite_graph_state(F2Matrix::from_rows({{1}})));
  Eigen::VectorXcd expected(4);
  expected << 0.5, 0.5, 0.5, -0.5;
  EXPECT_LE(distance(psi, expected), 1e-12);
  const Eigen::VectorXcd plus =
      state_of(bipartite_graph_state(F2Matrix::from_rows({{0}})));
  EXPECT_LE(distance(plus, Eigen::VectorXcd::Constant(4, 0.5)), 1e-12);
}

TEST(GraphStates, TriangleAmplitudes) {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const Eigen::VectorXcd psi = state_of(graph_state_box(k3));
  for (int x = 0; x < 8; ++x) {
    const int a = (x >> 2) & 1, b = (x >> 1) & 1, c = x & 1;
    const double sign = ((a * b + a * c + b * c) % 2) ? -1 : 1;
    EXPECT_NEAR(std::abs(psi[x] - sign * std::pow(2, -1.5)), 0, 1e-12);
  }
  EXPECT_LE(distance(state_of(graph_state_zx(k3)), psi), 1e-12);
}

TEST(GraphStates, ConstructorsAgreeWithOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t masks = 1ULL << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const Graph g = Graph::from_mask(n, mask);
      const Eigen::VectorXcd expected = oracle::graph_state(n, g.edges());
      EXPECT_LE(distance(state_of(graph_state_box(g)), expected), 1e-12)
          << g.to_string();
      EXPECT_LE(distance(state_of(graph_state_zx(g)), expected), 1e-12)
          << g.to_string();
    }
  }
}

TEST(GraphStates, PivotAndLocalComplementExamples) {
  const Graph edge(2, {{0, 1}});
  EXPECT_EQ(pivot(edge, 0, 1), edge);
  const Graph path(3, {{0, 1}, {1, 2}});
  const Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(local_complement(path, 1), triangle);
  EXPECT_EQ(local_complement(local_complement(triangle, 0), 0), triangle);
  EXPECT_THROW(pivot(path, 0, 2), ParameterError);
}

TEST(GraphStates, PivotEquationExamples) {
  const auto e1 = pivot_equation(F2Matrix::from_rows({{1}}));
  EXPECT_TRUE(equal_semantics(e1.lhs, e1.rhs));
  const F2Matrix gamma = F2Matrix::from_rows({{1, 1}, {1, 0}});
  const auto e2 = pivot_equation(gamma);
  EXPECT_TRUE(equal_semantics(e2.lhs, e2.rhs));
  // C + BA with A = [1], B = [1], C = [0].
  EXPECT_TRUE(pivot_biadjacency(gamma).get(1, 1));
  EXPECT_THROW(pivot_equation(F2Matrix::from_rows({{0}})), ParameterError);
}

TEST(GraphStates, LocalComplementEquationExamples) {
  for (const Graph& g : {Graph(1), Graph(2, {{0, 1}}),
                         Graph(3, {{0, 1}, {0, 2}, {1, 2}})}) {
    for (std::size_t u = 0; u < g.order(); ++u) {
      const auto eq = locomp_equation(g, u);
      EXPECT_TRUE(equal_semantics(eq.lhs, eq.rhs)) << g.to_string() << u;
    }
  }
}

}  // namespace
}  // namespace szx
