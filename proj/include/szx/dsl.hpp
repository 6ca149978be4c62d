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

#include <cctype>
#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "szx/diagram.hpp"
#include "szx/errors.hpp"

namespace szx {

// Grammar (fully parenthesised, whitespace separated, ';' starts a comment
// outside strings):
//
//   term := (gz k l n a1 .. an) | (gx k l n a1 .. an) | (h n)
//         | (div a b) | (gath a b) | (swap n m) | (cup n) | (cap n)
//         | (id n) | (mat FWD|BWD "rows;separated;by;semicolons")
//         | (scalar) | (seq term term) | (par term term)
//
// A single angle on a spider with legs stands for the constant vector.
// Angles are decimal numbers or multiples of pi such as pi, -pi/2, 3pi/4.

namespace detail {

struct Token {
  enum class Kind { Open, Close, Atom, String, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip();
    const std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::Kind::End, "", line, col};
    const char c = src_[pos_];
    if (c == '(') {
      advance();
      return {Token::Kind::Open, "(", line, col};
    }
    if (c == ')') {
      advance();
      return {Token::Kind::Close, ")", line, col};
    }
    if (c == '"') {
      advance();
      std::string text;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        text += src_[pos_];
        advance();
      }
      if (pos_ >= src_.size()) throw ParseError("unterminated string", line, col);
      advance();
      return {Token::Kind::String, text, line, col};
    }
    std::string text;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != '"' &&
           src_[pos_] != ';') {
      text += src_[pos_];
      advance();
    }
    return {Token::Kind::Atom, text, line, col};
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { bump(); }

  Diagram parse_all() {
    Diagram d = term();
    if (tok_.kind != Token::Kind::End) fail("unexpected trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, tok_.line, tok_.column);
  }

  void bump() { tok_ = lexer_.next(); }

  void expect(Token::Kind kind, const char* what) {
    if (tok_.kind != kind) fail(std::string("expected ") + what);
    bump();
  }

  std::string atom(const char* what) {
    if (tok_.kind != Token::Kind::Atom) fail(std::string("expected ") + what);
    std::string s = tok_.text;
    bump();
    return s;
  }

  std::size_t natural(const char* what) {
    const Token at = tok_;
    const std::string s = atom(what);
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw ParseError(std::string("expected ") + what + ", got '" + s + "'",
                       at.line, at.column);
    }
    return v;
  }

  double angle() {
    const Token at = tok_;
    const std::string s = atom("an angle");
    auto bad = [&]() -> double {
      throw ParseError("malformed angle '" + s + "'", at.line, at.column);
    };
    const std::size_t pi = s.find("pi");
    if (pi == std::string::npos) {
      double v = 0;
      const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || end != s.data() + s.size()) return bad();
      return v;
    }
    std::string coef = s.substr(0, pi);
    double k = 1;
    if (coef == "-") {
      k = -1;
    } else if (!coef.empty()) {
      const auto [end, ec] =
          std::from_chars(coef.data(), coef.data() + coef.size(), k);
      if (ec != std::errc() || end != coef.data() + coef.size()) return bad();
    }
    std::string tail = s.substr(pi + 2);
    double div = 1;
    if (!tail.empty()) {
      if (tail[0] != '/') return bad();
      tail = tail.substr(1);
      const auto [end, ec] =
          std::from_chars(tail.data(), tail.data() + tail.size(), div);
      if (ec != std::errc() || end != tail.data() + tail.size() || div == 0) {
        return bad();
      }
    }
    return k * kPi / div;
  }

  Diagram term() {
    const Token open = tok_;
    expect(Token::Kind::Open, "'('");
    const std::string head = atom("a generator name");
    Diagram d = body(head, open);
    expect(Token::Kind::Close, "')'");
    return d;
  }

  Diagram build(const Token& at, const std::function<Diagram()>& make) {
    try {
      return make();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), at.line, at.column);
    }
  }

  Diagram body(const std::string& head, const Token& at) {
    if (head == "gz" || head == "gx") {
      const std::size_t k = natural("an input count");
      const std::size_t l = natural("an output count");
      const std::size_t n = natural("a size");
      PhaseVector phases;
      while (tok_.kind == Token::Kind::Atom) phases.push_back(angle());
      const Colour c = head == "gz" ? Colour::Green : Colour::Red;
      return build(at, [&] {
        if (phases.size() == 1 && n != 1) return spider(c, k, l, n, phases[0]);
        return spider(c, k, l, n, phases);
      });
    }
    if (head == "h" || head == "cup" || head == "cap" || head == "id") {
      const std::size_t n = natural("a size");
      return build(at, [&] {
        if (head == "h") return hadamard(n);
        if (head == "cup") return cup(n);
        if (head == "cap") return cap(n);
        return identity(n);
      });
    }
    if (head == "div" || head == "gath" || head == "swap") {
      const std::size_t a = natural("a size");
      const std::size_t b = natural("a size");
      return build(at, [&] {
        if (head == "div") return divider(a, b);
        if (head == "gath") return gatherer(a, b);
        return swap(a, b);
      });
    }
    if (head == "mat") {
      const std::string dir = atom("FWD or BWD");
      if (dir != "FWD" && dir != "BWD") fail("expected FWD or BWD");
      if (tok_.kind != Token::Kind::String) fail("expected a quoted matrix");
      const Token mt = tok_;
      bump();
      return build(mt, [&] {
        const F2Matrix a = F2Matrix::parse_compact(mt.text);
        return dir == "FWD" ? matrix_box(a) : matrix_box_backward(a);
      });
    }
    if (head == "scalar") return empty_diagram();
    if (head == "seq" || head == "par") {
      const Diagram f = term();
      const Diagram g = term();
      return build(at, [&] { return head == "seq" ? seq(f, g) : par(f, g); });
    }
    throw ParseError("unknown generator '" + head + "'", at.line, at.column);
  }

  Lexer lexer_;
  Token tok_{Token::Kind::End, "", 1, 1};
};

inline std::string format_angle(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace detail

inline Diagram parse_diagram(std::string_view text) {
  return detail::Parser(text).parse_all();
}

/// Inverse of parse_diagram; angles are printed with full precision.
inline std::string print_diagram(const Diagram& d) {
  if (!d.is_leaf()) {
    return std::string(d.kind() == Diagram::Kind::Seq ? "(seq " : "(par ") +
           print_diagram(d.child(0)) + " " + print_diagram(d.child(1)) + ")";
  }
  auto sz = [](std::size_t v) { return std::to_string(v); };
  return std::visit(
      overloaded{
          [&](const Spider& s) {
            std::string out = std::string("(") +
                              (s.colour == Colour::Green ? "gz " : "gx ") +
                              sz(s.inputs) + " " + sz(s.outputs) + " " +
                              sz(s.size);
            for (double a : s.phases) out += " " + detail::format_angle(a);
            return out + ")";
          },
          [&](const Hadamard& h) { return "(h " + sz(h.size) + ")"; },
          [&](const Divider& v) {
            return "(div " + sz(v.first) + " " + sz(v.second) + ")";
          },
          [&](const Gatherer& v) {
            return "(gath " + sz(v.first) + " " + sz(v.second) + ")";
          },
          [&](const Swap& v) {
            return "(swap " + sz(v.first) + " " + sz(v.second) + ")";
          },
          [&](const Cup& c) { return "(cup " + sz(c.size) + ")"; },
          [&](const Cap& c) { return "(cap " + sz(c.size) + ")"; },
          [&](const Identity& i) { return "(id " + sz(i.size) + ")"; },
          [](const EmptyScalar&) { return std::string("(scalar)"); },
          [](const MatrixBox& m) {
            return std::string("(mat ") + (m.forward ? "FWD" : "BWD") + " \"" +
                   m.matrix.to_compact() + "\")";
          },
      },
      d.generator());
}

}  // namespace szx
