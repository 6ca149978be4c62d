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
#include <sstream>

#include "oracles.hpp"
#include "szx/f2_matrix.hpp"

namespace szx {
namespace {

F2Matrix m(std::initializer_list<std::initializer_list<int>> rows) {
  return F2Matrix::from_rows(rows);
}

TEST(F2Matrix, RejectsEmptyShapes) {
  EXPECT_THROW(F2Matrix(0, 2), ShapeError);
  EXPECT_THROW(F2Matrix(2, 0), ShapeError);
}

TEST(F2Matrix, AddIsXor) {
  EXPECT_EQ(m({{1, 0}, {1, 1}}) + m({{1, 0}, {1, 1}}), F2Matrix::zeros(2, 2));
  EXPECT_EQ(m({{1, 1}}) + m({{0, 1}}), m({{1, 0}}));
  EXPECT_EQ(m({{0}}) + m({{0}}), m({{0}}));
  EXPECT_THROW(add(F2Matrix(1, 2), F2Matrix(2, 1)), ShapeError);
}

TEST(F2Matrix, MulExamples) {
  EXPECT_EQ(m({{1, 1}, {0, 1}}) * m({{1, 0}, {1, 1}}), m({{0, 1}, {1, 1}}));
  EXPECT_EQ(m({{1, 1}}) * m({{1}, {1}}), m({{0}}));
  std::mt19937_64 rng(3);
  for (std::size_t k = 1; k <= 4; ++k) {
    const F2Matrix a = oracle::random_matrix(rng, 3, k);
    EXPECT_EQ(F2Matrix::identity(3) * a, a);
  }
  EXPECT_THROW(mul(F2Matrix(2, 3), F2Matrix(2, 3)), ShapeError);
}

TEST(F2Matrix, TransposeAndStacking) {
  EXPECT_EQ(transpose(m({{1, 0}, {1, 1}})), m({{1, 1}, {0, 1}}));
  EXPECT_EQ(transpose(m({{1, 0, 1}})).rows(), 3u);
  EXPECT_EQ(vstack(m({{1}}), m({{0}})), m({{1}, {0}}));
  EXPECT_EQ(hstack(m({{1}, {0}}), m({{0}, {1}})), F2Matrix::identity(2));
  EXPECT_THROW(vstack(F2Matrix(1, 2), F2Matrix(1, 3)), ShapeError);
  EXPECT_THROW(hstack(F2Matrix(2, 1), F2Matrix(3, 1)), ShapeError);
  const F2Matrix a = m({{1, 0, 1}, {0, 1, 1}});
  const F2Matrix b = m({{1, 1, 1}});
  const F2Matrix s = vstack(a, b);
  EXPECT_EQ(s.block(0, 0, 2, 3), a);
  EXPECT_EQ(s.block(2, 0, 1, 3), b);
}

TEST(F2Matrix, RankAndInjectivityExamples) {
  EXPECT_EQ(rank(F2Matrix::identity(3)), 3u);
  EXPECT_TRUE(is_injective(m({{1}, {1}})));
  EXPECT_TRUE(oracle::injective_by_enumeration(m({{1}, {1}})));
  EXPECT_TRUE(is_surjective(m({{1, 1}})));
  EXPECT_TRUE(oracle::surjective_by_enumeration(m({{1, 1}})));
  EXPECT_FALSE(is_injective(m({{1, 1}})));
  EXPECT_EQ(rank(m({{1, 1}, {1, 1}})), 1u);
}

TEST(F2Matrix, ApplyAndPopcount) {
  const F2Matrix a = m({{1, 0}, {1, 1}});
  EXPECT_EQ(apply(a, F2Matrix::column({0, 0})), F2Matrix::column({0, 0}));
  EXPECT_EQ(apply(a, F2Matrix::column({1, 1})), F2Matrix::column({1, 0}));
  const F2Matrix x = F2Matrix::column({1, 0, 1});
  EXPECT_EQ(apply(F2Matrix::identity(3), x), x);
  EXPECT_THROW(apply(a, F2Matrix(2, 2)), ShapeError);
  EXPECT_EQ(popcount(F2Matrix::zeros(2, 2)), 0u);
  EXPECT_EQ(popcount(F2Matrix::identity(3)), 3u);
  EXPECT_EQ(popcount(m({{1, 1}, {1, 0}})), 3u);
}

TEST(F2Matrix, ApplyToIndexUsesMostSignificantFirst) {
  const F2Matrix a = m({{1, 0}, {1, 1}});
  for (std::uint64_t x = 0; x < 4; ++x) {
    const auto y = oracle::naive_apply(oracle::to_bits(a), oracle::bits_of(x, 2));
    EXPECT_EQ(apply_to_index(a, x), static_cast<std::uint64_t>(y[0] * 2 + y[1]));
  }
}

TEST(F2Matrix, TextFormats) {
  const F2Matrix a = F2Matrix::parse("101\n011\n");
  EXPECT_EQ(a, m({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(F2Matrix::parse(a.to_string()), a);
  EXPECT_EQ(F2Matrix::parse_compact(a.to_compact()), a);
  EXPECT_THROW(F2Matrix::parse("10\n1\n"), ParseError);
  EXPECT_THROW(F2Matrix::parse("12\n"), ParseError);
  std::ostringstream os;
  os << a;
  EXPECT_EQ(os.str(), "[101;011]");
}

TEST(F2MatrixProperty, AlgebraMatchesNaiveOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = dim(rng), k = dim(rng), c = dim(rng);
    const F2Matrix a = oracle::random_matrix(rng, r, k);
    const F2Matrix a2 = oracle::random_matrix(rng, r, k);
    const F2Matrix a3 = oracle::random_matrix(rng, r, k);
    const F2Matrix b = oracle::random_matrix(rng, k, c);
    const F2Matrix b2 = oracle::random_matrix(rng, k, c);
    EXPECT_EQ(oracle::to_bits(a * b),
              oracle::naive_mul(oracle::to_bits(a), oracle::to_bits(b)));
    EXPECT_EQ(oracle::to_bits(a + a2),
              oracle::naive_add(oracle::to_bits(a), oracle::to_bits(a2)));
    EXPECT_EQ((a + a2) + a3, a + (a2 + a3));
    EXPECT_EQ(a + a2, a2 + a);
    EXPECT_EQ(a + a, F2Matrix::zeros(r, k));
    EXPECT_EQ(a * (b + b2), a * b + a * b2);
    EXPECT_EQ((a + a2) * b, a * b + a2 * b);
    EXPECT_EQ(transpose(a * b), transpose(b) * transpose(a));
    EXPECT_EQ(transpose(transpose(a)), a);
    EXPECT_EQ(rank(a), rank(transpose(a)));
    const F2Matrix d = oracle::random_matrix(rng, c, dim(rng));
    EXPECT_EQ((a * b) * d, a * (b * d));
  }
}

TEST(F2MatrixProperty, RankPredicatesMatchEnumeration) {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t c = 1; c <= 4; ++c) {
      std::mt19937_64 rng(r * 10 + c);
      const std::size_t total = r * c;
      const std::uint64_t count = std::min<std::uint64_t>(1ULL << total, 256);
      for (std::uint64_t i = 0; i < count; ++i) {
        const F2Matrix a = total <= 8 ? oracle::matrix_from_index(i, r, c)
                                      : oracle::random_matrix(rng, r, c);
        EXPECT_EQ(is_injective(a), oracle::injective_by_enumeration(a)) << a;
        EXPECT_EQ(is_surjective(a), oracle::surjective_by_enumeration(a)) << a;
      }
    }
  }
}

}  // namespace
}  // namespace szx
