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
#include "szx/cpc.hpp"
#include "szx/normalize.hpp"
#include "szx/semantics.hpp"

namespace szx {
namespace {

struct RandomCode {
  CpcCode code;
  std::vector<int> x, y, z;
};

std::vector<int> random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> v(n);
  for (auto& b : v) b = static_cast<int>(rng() % 2);
  return v;
}

RandomCode random_code(std::mt19937_64& rng, std::size_t max_total) {
  while (true) {
    const std::size_t a = 1 + rng() % 4, b = 1 + rng() % 4, c = 1 + rng() % 4;
    if (a + b + c > max_total) continue;
    return {CpcCode(oracle::random_matrix(rng, a, b), oracle::random_matrix(rng, c, b),
                    oracle::random_matrix(rng, c, a)),
            random_bits(rng, a), random_bits(rng, b), random_bits(rng, c)};
  }
}

const F2Matrix kOne = F2Matrix::from_rows({{1}});

TEST(Cpc, ShapesAreChecked) {
  EXPECT_THROW(CpcCode(kOne, F2Matrix::from_rows({{1, 0}}), kOne), ShapeError);
  const CpcCode k(F2Matrix::zeros(2, 1), F2Matrix::zeros(3, 1), F2Matrix::zeros(3, 2));
  EXPECT_EQ(cpc_encoder(k).in_type(), WireType({1}));
  EXPECT_EQ(cpc_encoder(k).out_type(), WireType({2, 1, 3}));
  EXPECT_EQ(cpc_decoder(k).in_type(), WireType({2, 1, 3}));
  EXPECT_THROW(cpc_error_equation(k, CpcErrorKind::Bit, {1}, {1}, {1, 1, 1}),
               ParameterError);
}

TEST(Cpc, SmallestEncoderIsAnIsometry) {
  const CpcCode k(kOne, kOne, kOne);
  const Eigen::MatrixXcd e = interpret(cpc_encoder(k)).matrix;
  EXPECT_LT((e.adjoint() * e - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(),
            1e-9);
  EXPECT_TRUE(decide_equal(seq(cpc_encoder(k), cpc_decoder(k)), identity(1)));
}

// The encoder sends |y> to 2^{-c/2} sum_w |By + C^t w>|y + P^t w>|w>.
TEST(Cpc, EncoderMatchesCodewordOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const CpcCode k = random_code(rng, 7).code;
    const std::size_t a = k.a(), b = k.b(), c = k.c();
    const Eigen::MatrixXcd e = interpret(cpc_encoder(k)).matrix;
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(e.rows(), e.cols());
    const auto bb = oracle::to_bits(k.B), pp = oracle::to_bits(transpose(k.P)),
               cc = oracle::to_bits(transpose(k.C));
    for (std::uint64_t yi = 0; yi < (1U << b); ++yi) {
      for (std::uint64_t wi = 0; wi < (1U << c); ++wi) {
        const auto y = oracle::bits_of(yi, b), w = oracle::bits_of(wi, c);
        const auto by = oracle::naive_apply(bb, y), cw = oracle::naive_apply(cc, w),
                   pw = oracle::naive_apply(pp, w);
        std::uint64_t row = 0;
        for (std::size_t i = 0; i < a; ++i) row = 2 * row + static_cast<unsigned>(by[i] ^ cw[i]);
        for (std::size_t i = 0; i < b; ++i) row = 2 * row + static_cast<unsigned>(y[i] ^ pw[i]);
        row = (row << c) | wi;
        expected(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(yi)) +=
            std::pow(2.0, -0.5 * static_cast<double>(c));
      }
    }
    EXPECT_LT((e - expected).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Cpc, ZeroCodeIsStillAnIsometry) {
  const CpcCode k(F2Matrix::zeros(1, 2), F2Matrix::zeros(2, 2), F2Matrix::zeros(2, 1));
  const Eigen::MatrixXcd e = interpret(cpc_encoder(k)).matrix;
  EXPECT_LT((e.adjoint() * e - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(),
            1e-9);
}

TEST(Cpc, DecoderInvertsEncoder) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const CpcCode k = random_code(rng, 6).code;
    EXPECT_TRUE(decide_equal(seq(cpc_encoder(k), cpc_decoder(k)), identity(k.b())));
  }
}

TEST(Cpc, SinglePhaseFlipOnCheckPart) {
  const CpcCode k(kOne, kOne, kOne);
  const CpcSyndromes s = phase_error_syndromes(k, {0}, {0}, {1});
  EXPECT_EQ(s.syndrome, std::vector<int>{1});
  EXPECT_EQ(s.correction, std::vector<int>{0});
  const Equation e = cpc_error_equation(k, CpcErrorKind::Phase, {0}, {0}, {1});
  EXPECT_TRUE(decide_equal(e.lhs, e.rhs));
}

TEST(Cpc, NoErrorsGivesThePlainDecoder) {
  const CpcCode k(kOne, kOne, kOne);
  const Equation e = cpc_error_equation(k, CpcErrorKind::Phase, {0}, {0}, {0});
  EXPECT_EQ(e.rhs, cpc_decoder(k));
}

TEST(Cpc, ErrorsPropagateToSyndromes) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const RandomCode r = random_code(rng, 6);
    for (CpcErrorKind kind : {CpcErrorKind::Phase, CpcErrorKind::Bit}) {
      const Equation e = cpc_error_equation(r.code, kind, r.x, r.y, r.z);
      EXPECT_TRUE(decide_equal(e.lhs, e.rhs));
    }
  }
}

}  // namespace
}  // namespace szx
