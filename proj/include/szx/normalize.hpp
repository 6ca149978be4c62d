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
#include "szx/gadgets.hpp"
#include "szx/matrix_expansion.hpp"
#include "szx/semantics.hpp"

namespace szx {

/// One leaf expansion performed by the normalizer.
struct NormalStep {
  std::string rule;
  Path path;
  std::size_t measure_before;
  std::size_t measure_after;
};

/// d = gamma . core . delta, with delta = split_to_qubits(in),
/// gamma = merge_from_qubits(out) and only size-one generators in core.
struct ExpandedForm {
  Diagram delta;
  Diagram core;
  Diagram gamma;
  std::vector<NormalStep> trace;

  Diagram recomposed() const { return compose({delta, core, gamma}); }
};

namespace normalize_detail {

inline bool is_wire_leaf(const Diagram& leaf) {
  return leaf.as<Identity>() || leaf.as<Divider>() || leaf.as<Gatherer>() ||
         leaf.as<EmptyScalar>();
}

inline bool has_big_register(const WireType& t) {
  for (std::size_t r : t.registers()) {
    if (r > 1) return true;
  }
  return false;
}

/// Contribution of a leaf to the termination measure: zero exactly for
/// wires and size-one generators.
inline std::size_t weight(const Diagram& leaf) {
  if (is_wire_leaf(leaf)) return 0;
  const std::size_t legs = leaf.in_type().size() + leaf.out_type().size();
  if (leaf.as<MatrixBox>()) return legs + 1;
  const Spider* s = leaf.as<Spider>();
  const std::size_t size = s ? s->size : 0;
  if (size > 1 || has_big_register(leaf.in_type()) ||
      has_big_register(leaf.out_type())) {
    return legs + size;
  }
  return 0;
}

inline std::size_t measure(const Diagram& d) {
  std::size_t total = 0;
  for_each_leaf(d, [&](const Path&, const Diagram& leaf) { total += weight(leaf); });
  return total;
}

inline Diagram hadamards(std::size_t n) { return power(hadamard(1), n); }

/// Regroups k registers of n qubits, register-major, into n groups of k.
inline Diagram transpose_registers(std::size_t k, std::size_t n) {
  std::vector<std::size_t> perm(k * n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < n; ++i) perm[i * k + r] = r * n + i;
  }
  return permutation(perm, WireType::qubits(k * n));
}

inline Diagram spider_core(const Spider& s) {
  std::vector<Diagram> parts;
  for (std::size_t i = 0; i < s.size; ++i) {
    parts.push_back(spider(s.colour, s.inputs, s.outputs, 1, PhaseVector{s.phases[i]}));
  }
  std::vector<Diagram> chain;
  if (s.inputs > 1) chain.push_back(transpose_registers(s.inputs, s.size));
  chain.push_back(tensor(parts));
  if (s.outputs > 1) chain.push_back(transpose_registers(s.size, s.outputs));
  return compose(chain);
}

/// The size-one core of a big leaf on qubit wires, with the name of the rule
/// that justifies the expansion.
inline std::pair<std::string, Diagram> leaf_core(const Diagram& leaf) {
  return std::visit(
      overloaded{
          [](const Spider& s) -> std::pair<std::string, Diagram> {
            return {s.colour == Colour::Green ? "Z" : "X", spider_core(s)};
          },
          [](const Hadamard& h) -> std::pair<std::string, Diagram> {
            return {"W", hadamards(h.size)};
          },
          [](const Swap& s) -> std::pair<std::string, Diagram> {
            std::vector<std::size_t> perm(s.first + s.second);
            for (std::size_t t = 0; t < perm.size(); ++t) {
              perm[t] = t < s.second ? s.first + t : t - s.second;
            }
            return {"dswap", permutation(perm, WireType::qubits(perm.size()))};
          },
          [](const Cup& c) -> std::pair<std::string, Diagram> {
            const Diagram cups = power(cup(1), c.size);
            if (c.size == 1) return {"U", cups};
            return {"U", seq(cups, transpose_registers(c.size, 2))};
          },
          [](const Cap& c) -> std::pair<std::string, Diagram> {
            const Diagram caps = power(cap(1), c.size);
            if (c.size == 1) return {"A", caps};
            return {"A", seq(transpose_registers(2, c.size), caps)};
          },
          [](const MatrixBox& m) -> std::pair<std::string, Diagram> {
            const Diagram core = expand_matrix_sequential(m.matrix);
            return {"B", m.forward ? core : transposed(core)};
          },
          [&](const auto&) -> std::pair<std::string, Diagram> {
            throw StructureError("no expansion for " +
                                 generator_name(leaf.generator()));
          },
      },
      leaf.generator());
}

inline bool all_identities(const Diagram& d) {
  bool ok = true;
  for_each_leaf(d, [&](const Path&, const Diagram& leaf) {
    if (!leaf.as<Identity>()) ok = false;
  });
  return ok;
}

/// Wires become single-qubit identities; identity layers in sequence drop out.
inline Diagram flatten_wires(const Diagram& d) {
  if (d.is_leaf()) {
    if (!is_wire_leaf(d)) return d;
    return power(identity(1), d.in_type().size());
  }
  const Diagram a = flatten_wires(d.child(0));
  const Diagram b = flatten_wires(d.child(1));
  if (d.kind() == Diagram::Kind::Par) return par(a, b);
  if (all_identities(a)) return b;
  if (all_identities(b)) return a;
  return seq(a, b);
}

}  // namespace normalize_detail

/// True when every generator is a size-one ZX generator or a wire on
/// single qubits.
inline bool is_size_one(const Diagram& d) {
  bool ok = true;
  for_each_leaf(d, [&](const Path&, const Diagram& leaf) {
    if (leaf.as<MatrixBox>() || normalize_detail::weight(leaf) != 0) ok = false;
    if (normalize_detail::has_big_register(leaf.in_type()) ||
        normalize_detail::has_big_register(leaf.out_type())) {
      ok = false;
    }
  });
  return ok;
}

/// Rewrites d into expanded form. Each big leaf, leftmost first, is replaced by
/// dividers, its size-one core and gatherers; afterwards every remaining wire
/// is split into single qubits.
inline ExpandedForm to_expanded_form(const Diagram& d) {
  using namespace normalize_detail;
  Diagram cur = d;
  std::vector<NormalStep> trace;
  std::size_t current = measure(cur);
  while (current > 0) {
    Path target;
    Diagram leaf = cur;
    bool found = false;
    for_each_leaf(cur, [&](const Path& p, const Diagram& l) {
      if (!found && weight(l) > 0) {
        target = p;
        leaf = l;
        found = true;
      }
    });
    auto [rule, core] = leaf_core(leaf);
    std::vector<Diagram> chain;
    if (!leaf.in_type().empty()) chain.push_back(split_to_qubits(leaf.in_type()));
    chain.push_back(core);
    if (!leaf.out_type().empty()) chain.push_back(merge_from_qubits(leaf.out_type()));
    cur = replace_at(cur, target, compose(chain));
    const std::size_t next = measure(cur);
    if (next >= current) {
      throw StructureError("normalizer measure did not decrease at " +
                           path_to_string(target));
    }
    trace.push_back({rule, target, current, next});
    current = next;
  }
  return {split_to_qubits(d.in_type()), flatten_wires(cur),
          merge_from_qubits(d.out_type()), std::move(trace)};
}

inline std::string format_normal_trace(const std::vector<NormalStep>& trace) {
  std::string out;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const NormalStep& s = trace[k];
    out += "step " + std::to_string(k + 1) + ": " + s.rule + " L2R at " +
           path_to_string(s.path) + " measure=" + std::to_string(s.measure_before) +
           "->" + std::to_string(s.measure_after) + "\n";
  }
  return out;
}

/// Equality of diagrams by comparing the size-one cores of their expanded
/// forms.
inline bool decide_equal(const Diagram& a, const Diagram& b,
                         double tol = kDefaultTolerance,
                         const InterpretOptions& opts = {}) {
  if (a.in_type() != b.in_type() || a.out_type() != b.out_type()) {
    throw ComparisonError("cannot compare " + a.in_type().to_string() + " -> " +
                          a.out_type().to_string() + " with " +
                          b.in_type().to_string() + " -> " +
                          b.out_type().to_string());
  }
  const ExpandedForm fa = to_expanded_form(a);
  const ExpandedForm fb = to_expanded_form(b);
  return equal_semantics(fa.core, fb.core, tol, opts);
}

}  // namespace szx
