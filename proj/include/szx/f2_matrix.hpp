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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "szx/errors.hpp"

namespace szx {

/// Dense matrix over the two-element field.
///
/// Rows are stored as packed 64-bit words so that row operations are plain
/// XORs. Both dimensions are at least one; column vectors are simply
/// matrices with a single column.
class F2Matrix {
 public:
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
    if (rows == 0 || cols == 0) {
      throw ShapeError("F2Matrix dimensions must be positive, got " +
                       std::to_string(rows) + "x" + std::to_string(cols));
    }
    bits_.assign(rows_ * words_, 0);
  }

  static F2Matrix zeros(std::size_t rows, std::size_t cols) {
    return F2Matrix(rows, cols);
  }

  static F2Matrix ones(std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, true);
    return m;
  }

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static F2Matrix from_rows(
      std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  static F2Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty()) {
      throw ShapeError("F2Matrix needs at least one row and one column");
    }
    F2Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw ShapeError("ragged rows");
      for (std::size_t c = 0; c < m.cols_; ++c) {
        if (rows[r][c] != 0 && rows[r][c] != 1) {
          throw ShapeError("F2Matrix entries must be 0 or 1");
        }
        m.set(r, c, rows[r][c] == 1);
      }
    }
    return m;
  }

  /// Column vector from a list of bits.
  static F2Matrix column(const std::vector<int>& bits) {
    std::vector<std::vector<int>> rows;
    for (int b : bits) rows.push_back({b});
    return from_rows(rows);
  }

  /// Parses the text format: one row per line of '0'/'1' characters.
  /// Blank lines are skipped and a trailing '\r' is tolerated.
  static F2Matrix parse(std::string_view text) {
    std::vector<std::string> rows;
    std::vector<std::size_t> line_numbers;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(pos, end - pos));
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) {
        for (std::size_t c = 0; c < line.size(); ++c) {
          if (line[c] != '0' && line[c] != '1') {
            throw ParseError("expected '0' or '1'", line_no, c + 1);
          }
        }
        if (!rows.empty() && line.size() != rows.front().size()) {
          throw ParseError("ragged row: expected " +
                               std::to_string(rows.front().size()) +
                               " columns, got " + std::to_string(line.size()),
                           line_no, 1);
        }
        rows.push_back(std::move(line));
        line_numbers.push_back(line_no);
      }
      pos = end + 1;
    }
    if (rows.empty()) throw ParseError("empty matrix", 1, 1);
    F2Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c] == '1');
    return m;
  }

  /// Parses the compact single-line form "10;01" used inside diagrams.
  static F2Matrix parse_compact(std::string_view text) {
    std::string multiline(text);
    for (char& ch : multiline)
      if (ch == ';') ch = '\n';
    if (!multiline.empty() && multiline.back() == '\n') {
      throw ParseError("trailing ';' in matrix", 1, text.size());
    }
    return parse(multiline);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }

  void set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  bool operator==(const F2Matrix& other) const = default;

  /// Rows separated by newlines, no trailing newline.
  std::string to_string() const { return render('\n'); }

  /// Rows separated by ';'.
  std::string to_compact() const { return render(';'); }

  /// Column vector contents as 0/1 integers (column 0 for wider matrices).
  std::vector<int> column_bits(std::size_t c = 0) const {
    std::vector<int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = get(r, c) ? 1 : 0;
    return out;
  }

  /// Bits of a column vector packed into an integer, row 0 most significant.
  std::uint64_t column_as_index() const {
    std::uint64_t v = 0;
    for (std::size_t r = 0; r < rows_; ++r) v = (v << 1) | (get(r, 0) ? 1 : 0);
    return v;
  }

  static F2Matrix column_from_index(std::uint64_t index, std::size_t length) {
    F2Matrix v(length, 1);
    for (std::size_t r = 0; r < length; ++r) {
      v.set(r, 0, (index >> (length - 1 - r)) & 1U);
    }
    return v;
  }

  F2Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                 std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
      throw ShapeError("block out of range");
    }
    F2Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out.set(r, c, get(r0 + r, c0 + c));
    return out;
  }

 private:
  friend F2Matrix add(const F2Matrix&, const F2Matrix&);
  friend std::size_t rank(const F2Matrix&);
  friend std::size_t popcount(const F2Matrix&);

  std::string render(char sep) const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != 0) s += sep;
      for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    }
    return s;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline std::string shape_string(const F2Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

inline F2Matrix add(const F2Matrix& a, const F2Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("add: " + shape_string(a) + " vs " + shape_string(b));
  }
  F2Matrix out = a;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] ^= b.bits_[i];
  return out;
}

inline F2Matrix mul(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mul: " + shape_string(a) + " * " + shape_string(b));
  }
  F2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.get(k, j)) out.set(i, j, !out.get(i, j));
      }
    }
  }
  return out;
}

inline F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
  return add(a, b);
}
inline F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  return mul(a, b);
}

inline F2Matrix transpose(const F2Matrix& a) {
  F2Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(c, r, a.get(r, c));
  return out;
}

/// Block matrix [a; b].
inline F2Matrix vstack(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.cols()) {
    throw ShapeError("vstack: " + shape_string(a) + " over " + shape_string(b));
  }
  F2Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, c, a.get(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
      out.set(a.rows() + r, c, b.get(r, c));
  }
  return out;
}

/// Block matrix [c d].
inline F2Matrix hstack(const F2Matrix& c, const F2Matrix& d) {
  if (c.rows() != d.rows()) {
    throw ShapeError("hstack: " + shape_string(c) + " beside " +
                     shape_string(d));
  }
  F2Matrix out(c.rows(), c.cols() + d.cols());
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t j = 0; j < c.cols(); ++j) out.set(r, j, c.get(r, j));
    for (std::size_t j = 0; j < d.cols(); ++j)
      out.set(r, c.cols() + j, d.get(r, j));
  }
  return out;
}

inline std::size_t rank(const F2Matrix& a) {
  std::vector<std::uint64_t> w = a.bits_;
  const std::size_t stride = a.words_;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t r = pivot_row;
    while (r < a.rows() && !(w[r * stride + word] & mask)) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < stride; ++k)
        std::swap(w[r * stride + k], w[pivot_row * stride + k]);
    }
    for (std::size_t rr = 0; rr < a.rows(); ++rr) {
      if (rr != pivot_row && (w[rr * stride + word] & mask)) {
        for (std::size_t k = 0; k < stride; ++k)
          w[rr * stride + k] ^= w[pivot_row * stride + k];
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

inline bool is_injective(const F2Matrix& a) { return rank(a) == a.cols(); }
inline bool is_surjective(const F2Matrix& a) { return rank(a) == a.rows(); }

/// Matrix-vector product; x must be a column with a.cols() rows.
inline F2Matrix apply(const F2Matrix& a, const F2Matrix& x) {
  if (x.cols() != 1 || x.rows() != a.cols()) {
    throw ShapeError("apply: " + shape_string(a) + " on " + shape_string(x));
  }
  return mul(a, x);
}

inline std::size_t popcount(const F2Matrix& a) {
  std::size_t n = 0;
  for (std::uint64_t w : a.bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

/// Image of the basis index x (bit 0 of x is the last coordinate) under a.
/// Used by the interpreter; a.cols() and a.rows() must be at most 64.
inline std::uint64_t apply_to_index(const F2Matrix& a, std::uint64_t x) {
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    unsigned parity = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(i, k)) parity ^= (x >> (a.cols() - 1 - k)) & 1U;
    }
    y = (y << 1) | parity;
  }
  return y;
}

inline std::ostream& operator<<(std::ostream& os, const F2Matrix& m) {
  return os << "[" << m.to_compact() << "]";
}

}  // namespace szx
