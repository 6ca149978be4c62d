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
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "szx/diagram.hpp"
#include "szx/dsl.hpp"
#include "szx/f2_matrix.hpp"
#include "szx/gadgets.hpp"
#include "szx/graph_state.hpp"
#include "szx/matrix_expansion.hpp"

namespace szx {

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

enum class ParamKind {
  Size,     ///< integer >= 1
  Count,    ///< integer >= 0
  Angles,   ///< phase vector; zeros when omitted
  Bits,     ///< 0/1 vector; zeros when omitted
  Matrix,   ///< F2Matrix
  Diagram,  ///< a diagram, written in the DSL in scripts
  Colour,   ///< "green" (default) or "red"
};

using ParamValue = std::variant<std::size_t, PhaseVector, std::vector<int>,
                                F2Matrix, szx::Diagram, Colour>;

struct ParamSpec {
  std::string name;
  ParamKind kind;
  std::string doc;
  std::optional<ParamValue> fallback;
};

class RuleParams {
 public:
  RuleParams& set(const std::string& name, ParamValue value) {
    values_.insert_or_assign(name, std::move(value));
    return *this;
  }
  RuleParams& set(const std::string& name, int value) {
    if (value < 0) throw ParameterError(name + " must be non-negative");
    return set(name, ParamValue(static_cast<std::size_t>(value)));
  }

  bool has(const std::string& name) const { return values_.count(name) != 0; }
  const std::map<std::string, ParamValue>& values() const { return values_; }

  std::size_t size(const std::string& name) const {
    return get<std::size_t>(name, "an integer");
  }

  /// The stored vector, or zeros, checked against the expected length.
  PhaseVector angles(const std::string& name, std::size_t length) const {
    if (!has(name)) return PhaseVector(length, 0.0);
    const auto& v = get<PhaseVector>(name, "a phase vector");
    if (v.size() != length) {
      throw ParameterError(name + " needs " + std::to_string(length) +
                           " angles, got " + std::to_string(v.size()));
    }
    return v;
  }

  std::vector<int> bits(const std::string& name, std::size_t length) const {
    if (!has(name)) return std::vector<int>(length, 0);
    const auto& v = get<std::vector<int>>(name, "a bit vector");
    if (v.size() != length) {
      throw ParameterError(name + " needs " + std::to_string(length) +
                           " bits, got " + std::to_string(v.size()));
    }
    return v;
  }

  const F2Matrix& matrix(const std::string& name) const {
    return get<F2Matrix>(name, "a matrix");
  }
  const szx::Diagram& diagram(const std::string& name) const {
    return get<szx::Diagram>(name, "a diagram");
  }
  Colour colour(const std::string& name = "colour") const {
    return has(name) ? get<Colour>(name, "a colour") : Colour::Green;
  }

 private:
  template <class T>
  const T& get(const std::string& name, const char* what) const {
    const auto it = values_.find(name);
    if (it == values_.end()) throw ParameterError("missing parameter " + name);
    const T* v = std::get_if<T>(&it->second);
    if (!v) throw ParameterError("parameter " + name + " must be " + what);
    return *v;
  }

  std::map<std::string, ParamValue> values_;
};

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct RuleInstance {
  std::string name;
  RuleParams params;
  Diagram lhs;
  Diagram rhs;
};

struct RuleInfo {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> schema;
  /// Rules of the single-qubit calculus, which have size-n versions.
  bool liftable = false;
  /// Whether a colour parameter swaps every spider.
  bool coloured = false;
  std::function<Equation(const RuleParams&)> build;
  std::function<RuleParams(std::mt19937_64&)> sample;
};

namespace rules_detail {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline PhaseVector random_angles(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  PhaseVector v(n);
  for (auto& a : v) a = angle(rng);
  return v;
}

inline std::vector<int> random_bits(Rng& rng, std::size_t n) {
  std::vector<int> v(n);
  for (auto& b : v) b = static_cast<int>(uniform(rng, 0, 1));
  return v;
}

inline F2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  F2Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a.set(i, j, uniform(rng, 0, 1) == 1);
  }
  return a;
}

inline Colour random_colour(Rng& rng) {
  return uniform(rng, 0, 1) ? Colour::Red : Colour::Green;
}

inline PhaseVector sum(const PhaseVector& a, const PhaseVector& b) {
  PhaseVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline PhaseVector pi_times(const std::vector<int>& bits) {
  PhaseVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v[i] = bits[i] ? kPi : 0.0;
  return v;
}

inline PhaseVector pi_times(const F2Matrix& column) {
  return pi_times(column.column_bits());
}

inline F2Matrix column_of(const std::vector<int>& bits) {
  return F2Matrix::column(bits);
}

/// Sequential composite skipping empty diagrams.
inline Diagram chain(const std::vector<Diagram>& parts) {
  std::vector<Diagram> kept;
  for (const Diagram& p : parts) {
    if (!p.as<EmptyScalar>() || parts.size() == 1) kept.push_back(p);
  }
  if (kept.empty()) return empty_diagram();
  return compose(kept);
}

inline Diagram ids(std::size_t n, std::size_t count) {
  return power(identity(n), count);
}

inline Diagram big(Colour c, std::size_t k, std::size_t l, std::size_t n,
                   PhaseVector phases) {
  return spider(c, k, l, n, std::move(phases));
}

/// Spider on a+b qubits with dividers on every output, distributed into one
/// spider per part.
inline Equation distribution(Colour c, std::size_t k, std::size_t l,
                             std::size_t a, std::size_t b,
                             const PhaseVector& phases) {
  const PhaseVector pa(phases.begin(), phases.begin() + static_cast<long>(a));
  const PhaseVector pb(phases.begin() + static_cast<long>(a), phases.end());
  const Diagram lhs =
      chain({spider(c, k, l, a + b, phases), power(divider(a, b), l)});
  std::vector<Diagram> rhs;
  rhs.push_back(power(divider(a, b), k));
  if (k > 1) {
    std::vector<std::size_t> perm(2 * k);
    std::vector<std::size_t> sizes(2 * k);
    for (std::size_t t = 0; t < k; ++t) {
      perm[t] = 2 * t;
      perm[k + t] = 2 * t + 1;
      sizes[2 * t] = a;
      sizes[2 * t + 1] = b;
    }
    rhs.push_back(permutation(perm, WireType(sizes)));
  }
  rhs.push_back(par(spider(c, k, l, a, pa), spider(c, k, l, b, pb)));
  if (l > 1) {
    std::vector<std::size_t> perm(2 * l);
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s < l; ++s) sizes.push_back(a);
    for (std::size_t s = 0; s < l; ++s) sizes.push_back(b);
    for (std::size_t s = 0; s < l; ++s) {
      perm[2 * s] = s;
      perm[2 * s + 1] = l + s;
    }
    rhs.push_back(permutation(perm, WireType(sizes)));
  }
  return {lhs, chain(rhs)};
}

/// Random composite of wires, dividers and gatherers on a register list.
inline Diagram random_wiring(Rng& rng, const WireType& in, std::size_t steps) {
  Diagram d = identity_on(in);
  WireType cur = in;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto& regs = cur.registers();
    std::vector<Diagram> parts;
    std::vector<std::size_t> next;
    std::size_t i = 0;
    while (i < regs.size()) {
      const std::size_t pick = uniform(rng, 0, 2);
      if (pick == 1 && regs[i] > 1) {
        const std::size_t a = uniform(rng, 1, regs[i] - 1);
        parts.push_back(divider(a, regs[i] - a));
        next.push_back(a);
        next.push_back(regs[i] - a);
        ++i;
      } else if (pick == 2 && i + 1 < regs.size()) {
        parts.push_back(gatherer(regs[i], regs[i + 1]));
        next.push_back(regs[i] + regs[i + 1]);
        i += 2;
      } else {
        parts.push_back(identity(regs[i]));
        next.push_back(regs[i]);
        ++i;
      }
    }
    d = seq(d, tensor(parts));
    cur = WireType(next);
  }
  return d;
}

inline WireType random_type(Rng& rng, std::size_t total) {
  std::vector<std::size_t> parts;
  while (total > 0) {
    parts.push_back(uniform(rng, 1, total));
    total -= parts.back();
  }
  return WireType(parts);
}

inline Equation triangle_equation() {
  const Graph path(3, {{0, 1}, {1, 2}});
  const Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  return {seq(graph_state_zx(path),
              tensor({green(1, 1, 1, kPi / 2), red(1, 1, 1, -kPi / 2),
                      green(1, 1, 1, kPi / 2)})),
          graph_state_zx(triangle)};
}

inline ParamSpec size_spec(const std::string& name, const std::string& doc,
                           std::size_t fallback = 1) {
  return {name, ParamKind::Size, doc, ParamValue(fallback)};
}
inline ParamSpec count_spec(const std::string& name, const std::string& doc,
                            std::size_t fallback) {
  return {name, ParamKind::Count, doc, ParamValue(fallback)};
}
inline ParamSpec angles_spec(const std::string& name, const std::string& doc) {
  return {name, ParamKind::Angles, doc, std::nullopt};
}
inline ParamSpec bits_spec(const std::string& name, const std::string& doc) {
  return {name, ParamKind::Bits, doc, std::nullopt};
}
inline ParamSpec matrix_spec(const std::string& name, const std::string& doc) {
  return {name, ParamKind::Matrix, doc,
          ParamValue(F2Matrix::from_rows({{1}}))};
}
inline ParamSpec colour_spec() {
  return {"colour", ParamKind::Colour, "spider colour of the left-hand side",
          ParamValue(Colour::Green)};
}

/// Draws (k, l) leg counts with (k + l) * n qubits at most `cap`.
inline std::pair<std::size_t, std::size_t> legs(Rng& rng, std::size_t n,
                                                std::size_t cap) {
  while (true) {
    const std::size_t k = uniform(rng, 0, 3);
    const std::size_t l = uniform(rng, 0, 3);
    if ((k + l) * n <= cap) return {k, l};
  }
}

inline std::vector<RuleInfo> build_catalog() {
  std::vector<RuleInfo> rules;
  const Colour G = Colour::Green;

  // --- Single-qubit calculus, stated for registers of size n. ---

  rules.push_back(
      {"s1",
       "spider fusion along j >= 1 shared wires",
       {colour_spec(), size_spec("n", "register size"),
        count_spec("k", "inputs of the first spider", 1),
        count_spec("m", "outputs of the first spider that leave", 0),
        size_spec("j", "wires shared by both spiders"),
        count_spec("p", "inputs of the second spider that enter", 0),
        count_spec("l", "outputs of the second spider", 1),
        angles_spec("alpha", "phase of the first spider"),
        angles_spec("beta", "phase of the second spider")},
       true,
       true,
       [G](const RuleParams& p) {
         const std::size_t n = p.size("n"), k = p.size("k"), m = p.size("m"),
                           j = p.size("j"), q = p.size("p"), l = p.size("l");
         const PhaseVector a = p.angles("alpha", n), b = p.angles("beta", n);
         return Equation{
             seq(layer({big(G, k, m + j, n, a), ids(n, q)}),
                 layer({ids(n, m), big(G, j + q, l, n, b)})),
             big(G, k + q, m + l, n, sum(a, b))};
       },
       [](Rng& rng) {
         RuleParams p;
         while (true) {
           const std::size_t n = uniform(rng, 1, 3), k = uniform(rng, 0, 2),
                             m = uniform(rng, 0, 1), j = uniform(rng, 1, 2),
                             q = uniform(rng, 0, 1), l = uniform(rng, 0, 2);
           if ((k + q + m + l) * n > 10 || (k + q + m + j + q) * n > 14) {
             continue;
           }
           p.set("n", n).set("k", k).set("m", m).set("j", j).set("p", q);
           p.set("l", l);
           p.set("alpha", random_angles(rng, n));
           p.set("beta", random_angles(rng, n));
           p.set("colour", random_colour(rng));
           return p;
         }
       }});

  rules.push_back({"w1",
                   "a phase-free spider with one input and one output is a "
                   "wire",
                   {colour_spec(), size_spec("n", "register size")},
                   true,
                   true,
                   [G](const RuleParams& p) {
                     const std::size_t n = p.size("n");
                     return Equation{big(G, 1, 1, n, PhaseVector(n, 0.0)),
                                     identity(n)};
                   },
                   [](Rng& rng) {
                     RuleParams p;
                     p.set("n", uniform(rng, 1, 3));
                     p.set("colour", random_colour(rng));
                     return p;
                   }});

  rules.push_back({"w2",
                   "a wire is two Hadamards",
                   {size_spec("n", "register size")},
                   true,
                   false,
                   [](const RuleParams& p) {
                     const std::size_t n = p.size("n");
                     return Equation{identity(n),
                                     seq(hadamard(n), hadamard(n))};
                   },
                   [](Rng& rng) {
                     RuleParams p;
                     p.set("n", uniform(rng, 1, 3));
                     return p;
                   }});

  rules.push_back({"s2",
                   "the scalars sqrt(2)^n and sqrt(2)^-n cancel",
                   {size_spec("n", "register size")},
                   true,
                   false,
                   [](const RuleParams& p) {
                     const std::size_t n = p.size("n");
                     return Equation{par(bone(n), inverse_bone(n)),
                                     empty_diagram()};
                   },
                   [](Rng& rng) {
                     RuleParams p;
                     p.set("n", uniform(rng, 1, 3));
                     return p;
                   }});

  rules.push_back(
      {"c",
       "a green copy node copies a red basis state a*pi",
       {colour_spec(), size_spec("n", "register size"),
        bits_spec("a", "the copied basis state")},
       true,
       true,
       [G](const RuleParams& p) {
         const std::size_t n = p.size("n");
         const PhaseVector a = pi_times(p.bits("a", n));
         const Colour R = other(G);
         return Equation{
             par(bone(n), seq(big(R, 0, 1, n, a), big(G, 1, 2, n, PhaseVector(n, 0.0)))),
             par(big(R, 0, 1, n, a), big(R, 0, 1, n, a))};
       },
       [](Rng& rng) {
         RuleParams p;
         const std::size_t n = uniform(rng, 1, 3);
         p.set("n", n).set("a", random_bits(rng, n));
         p.set("colour", random_colour(rng));
         return p;
       }});

  rules.push_back(
      {"b",
       "bialgebra",
       {colour_spec(), size_spec("n", "register size")},
       true,
       true,
       [G](const RuleParams& p) {
         const std::size_t n = p.size("n");
         const Colour R = other(G);
         const PhaseVector z(n, 0.0);
         return Equation{
             seq(big(R, 2, 1, n, z), big(G, 1, 2, n, z)),
             par(compose({par(big(G, 1, 2, n, z), big(G, 1, 2, n, z)),
                          tensor({identity(n), swap(n, n), identity(n)}),
                          par(big(R, 2, 1, n, z), big(R, 2, 1, n, z))}),
                 bone(n))};
       },
       [](Rng& rng) {
         RuleParams p;
         p.set("n", uniform(rng, 1, 3));
         p.set("colour", random_colour(rng));
         return p;
       }});

  rules.push_back(
      {"h",
       "Hadamards on every leg change the colour of a spider",
       {colour_spec(), size_spec("n", "register size"),
        count_spec("k", "inputs", 1), count_spec("l", "outputs", 1),
        angles_spec("alpha", "phase")},
       true,
       true,
       [G](const RuleParams& p) {
         const std::size_t n = p.size("n"), k = p.size("k"), l = p.size("l");
         const PhaseVector a = p.angles("alpha", n);
         return Equation{chain({power(hadamard(n), k), big(G, k, l, n, a),
                                power(hadamard(n), l)}),
                         big(other(G), k, l, n, a)};
       },
       [](Rng& rng) {
         RuleParams p;
         const std::size_t n = uniform(rng, 1, 3);
         const auto [k, l] = legs(rng, n, 9);
         p.set("n", n).set("k", k).set("l", l);
         p.set("alpha", random_angles(rng, n));
         p.set("colour", random_colour(rng));
         return p;
       }});

  rules.push_back(
      {"e",
       "Euler decomposition of a Hadamard followed by two rotations",
       {colour_spec(), size_spec("n", "register size"),
        angles_spec("alpha1", "phase of the first rotation"),
        angles_spec("alpha2", "phase of the second rotation")},
       true,
       true,
       [G](const RuleParams& p) {
         const std::size_t n = p.size("n");
         const PhaseVector a1 = p.angles("alpha1", n);
         const PhaseVector a2 = p.angles("alpha2", n);
         PhaseVector b1(n), b2(n), b3(n), gamma(n);
         for (std::size_t i = 0; i < n; ++i) {
           const EulerAngles e = euler_angles(a1[i], a2[i]);
           b1[i] = e.beta1;
           b2[i] = e.beta2;
           b3[i] = e.beta3;
           gamma[i] = e.gamma;
         }
         const Colour R = other(G);
         return Equation{
             par(compose({hadamard(n), big(G, 1, 1, n, a1), big(R, 1, 1, n, a2)}),
                 bone(n)),
             par(compose({big(G, 1, 1, n, b1), big(R, 1, 1, n, b2),
                          big(G, 1, 1, n, b3)}),
                 phase_gadget(gamma))};
       },
       [](Rng& rng) {
         RuleParams p;
         const std::size_t n = uniform(rng, 1, 3);
         p.set("n", n);
         p.set("alpha1", random_angles(rng, n));
         p.set("alpha2", random_angles(rng, n));
         p.set("colour", random_colour(rng));
         return p;
       }});

  // --- Wires, dividers and gatherers. ---

  auto two_sizes = [](const std::string& what) {
    return std::vector<ParamSpec>{size_spec("n", "first part of " + what),
                                  size_spec("m", "second part of " + what)};
  };
  auto sample_ab = [](std::size_t cap) {
    return [cap](Rng& rng) {
      RuleParams p;
      while (true) {
        const std::size_t a = uniform(rng, 1, 3), b = uniform(rng, 1, 3);
        if (a + b <= cap) {
          p.set("n", a).set("m", b);
          return p;
        }
      }
    };
  };

  rules.push_back({"E",
                   "a divider followed by a gatherer is a wire",
                   two_sizes("the register"),
                   false,
                   false,
                   [](const RuleParams& p) {
                     const std::size_t a = p.size("n"), b = p.size("m");
                     return Equation{seq(divider(a, b), gatherer(a, b)),
                                     identity(a + b)};
                   },
                   sample_ab(6)});

  rules.push_back({"P",
                   "a gatherer followed by a divider is a pair of wires",
                   two_sizes("the register"),
                   false,
                   false,
                   [](const RuleParams& p) {
                     const std::size_t a = p.size("n"), b = p.size("m");
                     return Equation{seq(gatherer(a, b), divider(a, b)),
                                     par(identity(a), identity(b))};
                   },
                   sample_ab(6)});

  rules.push_back(
      {"U",
       "a cup on a+b splits into a cup on a and a cup on b",
       two_sizes("the register"),
       false,
       false,
       [](const RuleParams& p) {
         const std::size_t a = p.size("n"), b = p.size("m");
         return Equation{
             seq(cup(a + b), par(divider(a, b), divider(a, b))),
             seq(par(cup(a), cup(b)),
                 tensor({identity(a), swap(a, b), identity(b)}))};
       },
       sample_ab(6)});

  rules.push_back(
      {"A",
       "a cap on a+b splits into a cap on a and a cap on b",
       two_sizes("the register"),
       false,
       false,
       [](const RuleParams& p) {
         const std::size_t a = p.size("n"), b = p.size("m");
         return Equation{
             seq(par(gatherer(a, b), gatherer(a, b)), cap(a + b)),
             seq(tensor({identity(a), swap(b, a), identity(b)}),
                 par(cap(a), cap(b)))};
       },
       sample_ab(5)});

  for (const char* name : {"Z", "X"}) {
    const Colour c = std::string(name) == "Z" ? Colour::Green : Colour::Red;
    rules.push_back(
        {name,
         std::string("dividers distribute through a ") + colour_name(c) +
             " spider",
         {size_spec("a", "first part"), size_spec("b", "second part"),
          count_spec("k", "inputs", 1), count_spec("l", "outputs", 1),
          angles_spec("alpha", "phase on a+b qubits")},
         false,
         false,
         [c](const RuleParams& p) {
           const std::size_t a = p.size("a"), b = p.size("b");
           return distribution(c, p.size("k"), p.size("l"), a, b,
                               p.angles("alpha", a + b));
         },
         [](Rng& rng) {
           RuleParams p;
           const std::size_t a = uniform(rng, 1, 3), b = uniform(rng, 1, 3);
           const auto [k, l] = legs(rng, a + b, 10);
           p.set("a", a).set("b", b).set("k", k).set("l", l);
           p.set("alpha", random_angles(rng, a + b));
           return p;
         }});
  }

  rules.push_back({"W",
                   "dividers distribute through Hadamards",
                   two_sizes("the register"),
                   false,
                   false,
                   [](const RuleParams& p) {
                     const std::size_t a = p.size("n"), b = p.size("m");
                     return Equation{
                         seq(hadamard(a + b), divider(a, b)),
                         seq(divider(a, b), par(hadamard(a), hadamard(b)))};
                   },
                   sample_ab(6)});

  rules.push_back(
      {"dswap",
       "a divider passes through a swap",
       {size_spec("a", "first part"), size_spec("b", "second part"),
        size_spec("c", "the other swapped register")},
       false,
       false,
       [](const RuleParams& p) {
         const std::size_t a = p.size("a"), b = p.size("b"), c = p.size("c");
         return Equation{
             seq(swap(a + b, c), par(identity(c), divider(a, b))),
             compose({par(divider(a, b), identity(c)),
                      par(identity(a), swap(b, c)),
                      par(swap(a, c), identity(b))})};
       },
       [](Rng& rng) {
         RuleParams p;
         while (true) {
           const std::size_t a = uniform(rng, 1, 3), b = uniform(rng, 1, 3),
                             c = uniform(rng, 1, 3);
           if (a + b + c > 7) continue;
           p.set("a", a).set("b", b).set("c", c);
           return p;
         }
       }});

  // --- Compact axioms. ---

  rules.push_back(
      {"Z1",
       "a copy node on a+b is two copy nodes",
       {colour_spec(), size_spec("a", "first part"),
        size_spec("b", "second part")},
       false,
       true,
       [G](const RuleParams& p) {
         const std::size_t a = p.size("a"), b = p.size("b");
         auto copy = [G](std::size_t n) {
           return big(G, 1, 2, n, PhaseVector(n, 0.0));
         };
         return Equation{
             seq(copy(a + b), par(divider(a, b), divider(a, b))),
             compose({divider(a, b), par(copy(a), copy(b)),
                      tensor({identity(a), swap(a, b), identity(b)})})};
       },
       [](Rng& rng) {
         RuleParams p;
         while (true) {
           const std::size_t a = uniform(rng, 1, 3), b = uniform(rng, 1, 3);
           if (3 * (a + b) > 12) continue;
           p.set("a", a).set("b", b).set("colour", random_colour(rng));
           return p;
         }
       }});

  rules.push_back(
      {"Z2",
       "a phased state on a+b splits into two states",
       {colour_spec(), size_spec("a", "first part"),
        size_spec("b", "second part"), angles_spec("alpha", "phase on a"),
        angles_spec("beta", "phase on b")},
       false,
       true,
       [G](const RuleParams& p) {
         const std::size_t a = p.size("a"), b = p.size("b");
         const PhaseVector pa = p.angles("alpha", a), pb = p.angles("beta", b);
         PhaseVector joined = pa;
         joined.insert(joined.end(), pb.begin(), pb.end());
         return Equation{seq(big(G, 0, 1, a + b, joined), divider(a, b)),
                         par(big(G, 0, 1, a, pa), big(G, 0, 1, b, pb))};
       },
       [](Rng& rng) {
         RuleParams p;
         const std::size_t a = uniform(rng, 1, 3), b = uniform(rng, 1, 3);
         p.set("a", a).set("b", b).set("colour", random_colour(rng));
         p.set("alpha", random_angles(rng, a)).set("beta", random_angles(rng, b));
         return p;
       }});

  rules.push_back(
      {"S",
       "fusion of two spiders joined by one wire",
       {colour_spec(), size_spec("n", "register size"),
        count_spec("k", "inputs", 1), count_spec("l", "outputs", 1),
        angles_spec("alpha", "first phase"), angles_spec("beta", "second phase")},
       false,
       true,
       [G](const RuleParams& p) {
         const std::size_t n = p.size("n"), k = p.size("k"), l = p.size("l");
         const PhaseVector a = p.angles("alpha", n), b = p.angles("beta", n);
         return Equation{seq(big(G, k, 1, n, a), big(G, 1, l, n, b)),
                         big(G, k, l, n, sum(a, b))};
       },
       [](Rng& rng) {
         RuleParams p;
         const std::size_t n = uniform(rng, 1, 3);
         const auto [k, l] = legs(rng, n, 9);
         p.set("n", n).set("k", k).set("l", l).set("colour", random_colour(rng));
         p.set("alpha", random_angles(rng, n)).set("beta", random_angles(rng, n));
         return p;
       }});

  rules.push_back({"W1",
                   "a phase-free spider with one input and one output is a "
                   "wire of any size",
                   {colour_spec(), size_spec("n", "register size")},
                   false,
                   true,
                   [G](const RuleParams& p) {
                     const std::size_t n = p.size("n");
                     return Equation{big(G, 1, 1, n, PhaseVector(n, 0.0)),
                                     identity(n)};
                   },
                   [](Rng& rng) {
                     RuleParams p;
                     p.set("n", uniform(rng, 1, 3));
                     p.set("colour", random_colour(rng));
                     return p;
                   }});

  rules.push_back({"W2",
                   "a wire of any size is two Hadamards",
                   {size_spec("n", "register size")},
                   false,
                   false,
                   [](const RuleParams& p) {
                     const std::size_t n = p.size("n");
                     return Equation{identity(n),
                                     seq(hadamard(n), hadamard(n))};
                   },
                   [](Rng& rng) {
                     RuleParams p;
                     p.set("n", uniform(rng, 1, 3));
                     return p;
                   }});

  rules.push_back({"H'",
                   "a phased spider between two Hadamards changes colour",
                   {colour_spec(), size_spec("n", "register size"),
                    angles_spec("alpha", "phase")},
                   false,
                   true,
                   [G](const RuleParams& p) {
                     const std::size_t n = p.size("n");
                     const PhaseVector a = p.angles("alpha", n);
                     return Equation{compose({hadamard(n), big(G, 1, 1, n, a),
                                              hadamard(n)}),
                                     big(other(G), 1, 1, n, a)};
                   },
                   [](Rng& rng) {
                     RuleParams p;
                     const std::size_t n = uniform(rng, 1, 3);
                     p.set("n", n).set("alpha", random_angles(rng, n));
                     p.set("colour", random_colour(rng));
                     return p;
                   }});

  // --- Matrices. ---

  auto matrix_dims = [](Rng& rng) {
    return std::pair{uniform(rng, 1, 3), uniform(rng, 1, 3)};
  };
  auto sample_a = [matrix_dims](Rng& rng) {
    RuleParams p;
    const auto [m, n] = matrix_dims(rng);
    p.set("A", random_matrix(rng, m, n));
    return p;
  };

  rules.push_back(
      {"0",
       "the zero matrix disconnects its input from its output",
       {size_spec("rows", "rows of the zero matrix"),
        size_spec("cols", "columns of the zero matrix")},
       false,
       false,
       [](const RuleParams& p) {
         const std::size_t m = p.size("rows"), n = p.size("cols");
         return Equation{
             matrix_box(F2Matrix::zeros(m, n)),
             par(seq(green(1, 0, n, 0.0), red(0, 1, m, 0.0)),
                 sqrt2_power(-static_cast<long>(m)))};
       },
       [](Rng& rng) {
         RuleParams p;
         p.set("rows", uniform(rng, 1, 3)).set("cols", uniform(rng, 1, 3));
         return p;
       }});

  rules.push_back({"1",
                   "the identity matrix is a wire",
                   {size_spec("n", "dimension")},
                   false,
                   false,
                   [](const RuleParams& p) {
                     const std::size_t n = p.size("n");
                     return Equation{matrix_box(F2Matrix::identity(n)),
                                     identity(n)};
                   },
                   [](Rng& rng) {
                     RuleParams p;
                     p.set("n", uniform(rng, 1, 3));
                     return p;
                   }});

  rules.push_back(
      {"L",
       "a vertically stacked matrix copies its input into both blocks",
       {matrix_spec("A", "upper block"), matrix_spec("B", "lower block")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         const F2Matrix& b = p.matrix("B");
         if (a.cols() != b.cols()) {
           throw ParameterError("L needs blocks with equal columns, got " +
                                shape_string(a) + " and " + shape_string(b));
         }
         return Equation{matrix_box(vstack(a, b)),
                         compose({green(1, 2, a.cols(), 0.0),
                                  par(matrix_box(a), matrix_box(b)),
                                  gatherer(a.rows(), b.rows())})};
       },
       [](Rng& rng) {
         RuleParams p;
         const std::size_t n = uniform(rng, 1, 3);
         p.set("A", random_matrix(rng, uniform(rng, 1, 2), n));
         p.set("B", random_matrix(rng, uniform(rng, 1, 2), n));
         return p;
       }});

  rules.push_back(
      {"C",
       "a horizontally joined matrix adds the images of both blocks",
       {matrix_spec("C", "left block"), matrix_spec("D", "right block")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& c = p.matrix("C");
         const F2Matrix& d = p.matrix("D");
         if (c.rows() != d.rows()) {
           throw ParameterError("C needs blocks with equal rows, got " +
                                shape_string(c) + " and " + shape_string(d));
         }
         const std::size_t m = c.rows();
         return Equation{
             matrix_box(hstack(c, d)),
             par(compose({divider(c.cols(), d.cols()),
                          par(matrix_box(c), matrix_box(d)),
                          red(2, 1, m, 0.0)}),
                 bone(m))};
       },
       [](Rng& rng) {
         RuleParams p;
         const std::size_t m = uniform(rng, 1, 3);
         p.set("C", random_matrix(rng, m, uniform(rng, 1, 2)));
         p.set("D", random_matrix(rng, m, uniform(rng, 1, 2)));
         return p;
       }});

  rules.push_back(
      {"K",
       "a green copy node copies a matrix",
       {matrix_spec("A", "the matrix")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         return Equation{
             seq(matrix_box(a), green(1, 2, a.rows(), 0.0)),
             seq(green(1, 2, a.cols(), 0.0), par(matrix_box(a), matrix_box(a)))};
       },
       sample_a});

  rules.push_back({"G",
                   "a green erase node erases a matrix",
                   {matrix_spec("A", "the matrix")},
                   false,
                   false,
                   [](const RuleParams& p) {
                     const F2Matrix& a = p.matrix("A");
                     return Equation{
                         seq(matrix_box(a), green(1, 0, a.rows(), 0.0)),
                         green(1, 0, a.cols(), 0.0)};
                   },
                   sample_a});

  rules.push_back(
      {"H",
       "Hadamards around a matrix give the backward transpose",
       {matrix_spec("A", "the matrix")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         const long n = static_cast<long>(a.cols()), m = static_cast<long>(a.rows());
         return Equation{
             compose({hadamard(a.cols()), matrix_box(a), hadamard(a.rows())}),
             par(matrix_box_backward(transpose(a)), sqrt2_power(n - m))};
       },
       sample_a});

  rules.push_back(
      {"J",
       "a red merge node is cocopied through a matrix",
       {matrix_spec("A", "the matrix")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         const long n = static_cast<long>(a.cols()), m = static_cast<long>(a.rows());
         return Equation{
             seq(red(2, 1, a.cols(), 0.0), matrix_box(a)),
             par(seq(par(matrix_box(a), matrix_box(a)), red(2, 1, a.rows(), 0.0)),
                 sqrt2_power(m - n))};
       },
       sample_a});

  rules.push_back({"F",
                   "a red zero state passes through a matrix",
                   {matrix_spec("A", "the matrix")},
                   false,
                   false,
                   [](const RuleParams& p) {
                     const F2Matrix& a = p.matrix("A");
                     const long n = static_cast<long>(a.cols());
                     const long m = static_cast<long>(a.rows());
                     return Equation{
                         seq(red(0, 1, a.cols(), 0.0), matrix_box(a)),
                         par(red(0, 1, a.rows(), 0.0), sqrt2_power(n - m))};
                   },
                   sample_a});

  rules.push_back(
      {"p",
       "copy, apply both matrices and merge is the matrix sum",
       {matrix_spec("A", "first summand"), matrix_spec("B", "second summand")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         const F2Matrix& b = p.matrix("B");
         if (a.rows() != b.rows() || a.cols() != b.cols()) {
           throw ParameterError("p needs equal shapes, got " + shape_string(a) +
                                " and " + shape_string(b));
         }
         return Equation{
             par(compose({green(1, 2, a.cols(), 0.0),
                          par(matrix_box(a), matrix_box(b)),
                          red(2, 1, a.rows(), 0.0)}),
                 bone(a.rows())),
             matrix_box(a + b)};
       },
       [matrix_dims](Rng& rng) {
         RuleParams p;
         const auto [m, n] = matrix_dims(rng);
         p.set("A", random_matrix(rng, m, n)).set("B", random_matrix(rng, m, n));
         return p;
       }});

  rules.push_back(
      {"m",
       "two matrices in sequence are their product",
       {matrix_spec("A", "first matrix"), matrix_spec("C", "second matrix")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         const F2Matrix& c = p.matrix("C");
         if (c.cols() != a.rows()) {
           throw ParameterError("m needs C.cols == A.rows, got " +
                                shape_string(a) + " and " + shape_string(c));
         }
         return Equation{seq(matrix_box(a), matrix_box(c)),
                         matrix_box(c * a)};
       },
       [matrix_dims](Rng& rng) {
         RuleParams p;
         const auto [m, n] = matrix_dims(rng);
         p.set("A", random_matrix(rng, m, n));
         p.set("C", random_matrix(rng, uniform(rng, 1, 3), m));
         return p;
       }});

  rules.push_back(
      {"N",
       "a red v*pi pushed through a matrix becomes a red (Av)*pi",
       {matrix_spec("A", "the matrix"), bits_spec("v", "the flipped bits")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         const auto v = p.bits("v", a.cols());
         return Equation{
             seq(red(1, 1, a.cols(), pi_times(v)), matrix_box(a)),
             seq(matrix_box(a), red(1, 1, a.rows(), pi_times(apply(a, column_of(v)))))};
       },
       [matrix_dims](Rng& rng) {
         RuleParams p;
         const auto [m, n] = matrix_dims(rng);
         p.set("A", random_matrix(rng, m, n)).set("v", random_bits(rng, n));
         return p;
       }});

  rules.push_back(
      {"O",
       "a green u*pi pulled back through a matrix becomes a green (A^t u)*pi",
       {matrix_spec("A", "the matrix"), bits_spec("u", "the phase bits")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         const auto u = p.bits("u", a.rows());
         return Equation{
             seq(matrix_box(a), green(1, 1, a.rows(), pi_times(u))),
             seq(green(1, 1, a.cols(), pi_times(apply(transpose(a), column_of(u)))),
                 matrix_box(a))};
       },
       [matrix_dims](Rng& rng) {
         RuleParams p;
         const auto [m, n] = matrix_dims(rng);
         p.set("A", random_matrix(rng, m, n)).set("u", random_bits(rng, m));
         return p;
       }});

  rules.push_back(
      {"I1",
       "an injective matrix followed by its backward version is a wire",
       {matrix_spec("A", "an injective matrix")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         if (!is_injective(a)) {
           throw ParameterError("I1 needs an injective matrix, " +
                                shape_string(a) + " has rank " +
                                std::to_string(rank(a)));
         }
         return Equation{seq(matrix_box(a), matrix_box_backward(a)),
                         identity(a.cols())};
       },
       [](Rng& rng) {
         RuleParams p;
         while (true) {
           const std::size_t n = uniform(rng, 1, 3), m = uniform(rng, n, 3);
           const F2Matrix a = random_matrix(rng, m, n);
           if (is_injective(a)) {
             p.set("A", a);
             return p;
           }
         }
       }});

  rules.push_back(
      {"S1",
       "a backward surjective matrix followed by the matrix is a scaled wire",
       {matrix_spec("A", "a surjective matrix")},
       false,
       false,
       [](const RuleParams& p) {
         const F2Matrix& a = p.matrix("A");
         if (!is_surjective(a)) {
           throw ParameterError("S1 needs a surjective matrix, " +
                                shape_string(a) + " has rank " +
                                std::to_string(rank(a)));
         }
         const long n = static_cast<long>(a.cols()), m = static_cast<long>(a.rows());
         return Equation{seq(matrix_box_backward(a), matrix_box(a)),
                         par(identity(a.rows()), sqrt2_power(2 * (n - m)))};
       },
       [](Rng& rng) {
         RuleParams p;
         while (true) {
           const std::size_t m = uniform(rng, 1, 3), n = uniform(rng, m, 3);
           const F2Matrix a = random_matrix(rng, m, n);
           if (is_surjective(a)) {
             p.set("A", a);
             return p;
           }
         }
       }});

  rules.push_back({"B",
                   "a matrix is the bipartite graph of its entries",
                   {matrix_spec("A", "the matrix")},
                   false,
                   false,
                   [](const RuleParams& p) {
                     const F2Matrix& a = p.matrix("A");
                     return Equation{matrix_box(a), expand_matrix(a)};
                   },
                   sample_a});

  rules.push_back(
      {"trig",
       "local complementation of a three-vertex path at its middle vertex",
       {size_spec("n", "register size")},
       true,
       false,
       [](const RuleParams& p) {
         const Equation e = triangle_equation();
         const std::size_t n = p.size("n");
         return Equation{lift(e.lhs, n), lift(e.rhs, n)};
       },
       [](Rng& rng) {
         RuleParams p;
         p.set("n", uniform(rng, 1, 3));
         return p;
       }});

  rules.push_back(
      {"R",
       "a diagram of wires, dividers and gatherers is the canonical wiring",
       {{"d", ParamKind::Diagram, "a wire-only diagram",
         ParamValue(identity(1))}},
       false,
       false,
       [](const RuleParams& p) {
         const Diagram& d = p.diagram("d");
         if (!is_wire_only(d)) {
           throw ParameterError(
               "R needs a diagram of wires, dividers and gatherers");
         }
         return Equation{d, rewire(d.in_type(), d.out_type())};
       },
       [](Rng& rng) {
         RuleParams p;
         const WireType in = random_type(rng, uniform(rng, 1, 6));
         p.set("d", random_wiring(rng, in, uniform(rng, 1, 4)));
         return p;
       }});

  return rules;
}

}  // namespace rules_detail

inline const std::vector<RuleInfo>& rule_catalog() {
  static const std::vector<RuleInfo> catalog = rules_detail::build_catalog();
  return catalog;
}

inline const RuleInfo& rule_info(const std::string& name) {
  for (const RuleInfo& r : rule_catalog()) {
    if (r.name == name) return r;
  }
  throw ParameterError("unknown rule '" + name + "'");
}

inline std::vector<std::string> rule_names() {
  std::vector<std::string> names;
  for (const RuleInfo& r : rule_catalog()) names.push_back(r.name);
  return names;
}

namespace rules_detail {

inline void check_kind(const ParamSpec& spec, const ParamValue& v,
                       const std::string& rule) {
  bool ok = false;
  switch (spec.kind) {
    case ParamKind::Size:
      ok = std::holds_alternative<std::size_t>(v) && std::get<std::size_t>(v) >= 1;
      break;
    case ParamKind::Count:
      ok = std::holds_alternative<std::size_t>(v);
      break;
    case ParamKind::Angles:
      ok = std::holds_alternative<PhaseVector>(v);
      break;
    case ParamKind::Bits: {
      ok = std::holds_alternative<std::vector<int>>(v);
      if (ok) {
        for (int b : std::get<std::vector<int>>(v)) ok = ok && (b == 0 || b == 1);
      }
      break;
    }
    case ParamKind::Matrix:
      ok = std::holds_alternative<F2Matrix>(v);
      break;
    case ParamKind::Diagram:
      ok = std::holds_alternative<Diagram>(v);
      break;
    case ParamKind::Colour:
      ok = std::holds_alternative<Colour>(v);
      break;
  }
  if (!ok) {
    throw ParameterError("rule " + rule + ": invalid value for " + spec.name);
  }
}

}  // namespace rules_detail

/// The rule's left- and right-hand sides for the given parameters; missing
/// parameters take their documented defaults.
inline RuleInstance instantiate(const std::string& name,
                                const RuleParams& params = {}) {
  const RuleInfo& info = rule_info(name);
  RuleParams full;
  for (const auto& [key, value] : params.values()) {
    const auto it = std::find_if(info.schema.begin(), info.schema.end(),
                                 [&](const ParamSpec& s) { return s.name == key; });
    if (it == info.schema.end()) {
      throw ParameterError("rule " + name + " has no parameter " + key);
    }
    rules_detail::check_kind(*it, value, name);
    full.set(key, value);
  }
  for (const ParamSpec& spec : info.schema) {
    if (!full.has(spec.name) && spec.fallback) full.set(spec.name, *spec.fallback);
  }
  Equation e = info.build(full);
  if (info.coloured && full.colour() == Colour::Red) {
    e = {colour_swap(e.lhs), colour_swap(e.rhs)};
  }
  if (e.lhs.in_type() != e.rhs.in_type() || e.lhs.out_type() != e.rhs.out_type()) {
    throw StructureError("rule " + name + " produced sides of different types");
  }
  return {name, full, e.lhs, e.rhs};
}

inline RuleParams random_params(const std::string& name, std::mt19937_64& rng) {
  return rule_info(name).sample(rng);
}

/// The size-n version of a rule of the single-qubit calculus: the size-one
/// instance with every generator replaced by its size-n version.
inline RuleInstance big_rule(const std::string& name, std::size_t n,
                             const RuleParams& params = {}) {
  const RuleInfo& info = rule_info(name);
  if (!info.liftable) {
    throw ParameterError("rule " + name + " is not a single-qubit rule");
  }
  RuleParams base = params;
  if (base.has("n") && base.size("n") != 1) {
    throw ParameterError("big_rule takes the size-one parameters");
  }
  const RuleInstance one = instantiate(name, base);
  RuleInstance out = one;
  out.lhs = lift(one.lhs, n);
  out.rhs = lift(one.rhs, n);
  return out;
}

// ---------------------------------------------------------------------------
// JSON encoding of parameters
// ---------------------------------------------------------------------------

inline nlohmann::json params_to_json(const RuleParams& params) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, value] : params.values()) {
    std::visit(overloaded{
                   [&](std::size_t v) { j[key] = v; },
                   [&](const PhaseVector& v) { j[key] = v; },
                   [&](const std::vector<int>& v) { j[key] = v; },
                   [&](const F2Matrix& v) { j[key] = v.to_compact(); },
                   [&](const Diagram& v) { j[key] = print_diagram(v); },
                   [&](Colour v) { j[key] = colour_name(v); },
               },
               value);
  }
  return j;
}

inline RuleParams params_from_json(const std::string& rule,
                                   const nlohmann::json& j) {
  if (!j.is_object()) throw ParameterError("parameters must be a JSON object");
  const RuleInfo& info = rule_info(rule);
  RuleParams p;
  for (const auto& [key, value] : j.items()) {
    const auto it = std::find_if(info.schema.begin(), info.schema.end(),
                                 [&](const ParamSpec& s) { return s.name == key; });
    if (it == info.schema.end()) {
      throw ParameterError("rule " + rule + " has no parameter " + key);
    }
    try {
      switch (it->kind) {
        case ParamKind::Size:
        case ParamKind::Count:
          p.set(key, ParamValue(value.get<std::size_t>()));
          break;
        case ParamKind::Angles:
          p.set(key, ParamValue(value.get<PhaseVector>()));
          break;
        case ParamKind::Bits:
          p.set(key, ParamValue(value.get<std::vector<int>>()));
          break;
        case ParamKind::Matrix:
          p.set(key, ParamValue(F2Matrix::parse_compact(value.get<std::string>())));
          break;
        case ParamKind::Diagram:
          p.set(key, ParamValue(parse_diagram(value.get<std::string>())));
          break;
        case ParamKind::Colour: {
          const auto s = value.get<std::string>();
          if (s != "green" && s != "red") {
            throw ParameterError("colour must be green or red");
          }
          p.set(key, ParamValue(s == "green" ? Colour::Green : Colour::Red));
          break;
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParameterError("rule " + rule + ": bad value for " + key + ": " +
                           e.what());
    }
  }
  return p;
}

}  // namespace szx
