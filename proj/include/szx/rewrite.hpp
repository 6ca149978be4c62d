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

#include <functional>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "szx/diagram.hpp"
#include "szx/rules.hpp"

namespace szx {

enum class Direction { L2R, R2L };

inline std::string direction_name(Direction d) {
  return d == Direction::L2R ? "L2R" : "R2L";
}

/// One rule application, as written in a derivation trace.
struct RewriteStep {
  std::string rule;
  Direction direction = Direction::L2R;
  Path path;
  RuleParams params;
};

/// Replaces the subtree at `path`, which must equal the chosen side of the
/// instance, by the other side.
inline Diagram apply_at(const Diagram& d, const Path& path,
                        const RuleInstance& inst, Direction dir) {
  const Diagram& from = dir == Direction::L2R ? inst.lhs : inst.rhs;
  const Diagram& to = dir == Direction::L2R ? inst.rhs : inst.lhs;
  const Diagram& target = subtree_at(d, path);
  if (!(target == from)) {
    throw MatchError("rule " + inst.name + " " + direction_name(dir) +
                     " does not match at " + path_to_string(path) + ": found " +
                     target.in_type().to_string() + " -> " +
                     target.out_type().to_string() + " " +
                     (target.is_leaf() ? generator_name(target.generator())
                                       : std::string("composite")));
  }
  return replace_at(d, path, to);
}

inline Diagram apply_step(const Diagram& d, const RewriteStep& step) {
  return apply_at(d, step.path, instantiate(step.rule, step.params),
                  step.direction);
}

inline std::string format_step(std::size_t k, const RewriteStep& step) {
  return "step " + std::to_string(k) + ": " + step.rule + " " +
         direction_name(step.direction) + " at " + path_to_string(step.path) +
         " params=" + params_to_json(step.params).dump();
}

/// Parses `step <k>: <rule> <L2R|R2L> at <path> params=<json>`.
inline RewriteStep parse_step(const std::string& line, std::size_t line_no = 1) {
  static const std::regex re(
      R"(^\s*step\s+\d+\s*:\s*(\S+)\s+(L2R|R2L)\s+at\s+(\S+)\s+params=(.*)$)");
  std::smatch m;
  if (!std::regex_match(line, m, re)) {
    throw ParseError("expected 'step <k>: <rule> <L2R|R2L> at <path> params=<json>'",
                     line_no, 1);
  }
  RewriteStep step;
  step.rule = m[1];
  step.direction = m[2] == "L2R" ? Direction::L2R : Direction::R2L;
  try {
    step.path = path_from_string(m[3]);
    step.params = params_from_json(step.rule, nlohmann::json::parse(m[4].str()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad params: ") + e.what(), line_no,
                     static_cast<std::size_t>(m.position(4)) + 1);
  } catch (const Error& e) {
    throw ParseError(e.what(), line_no, 1);
  }
  return step;
}

/// Steps of a script; blank lines and lines starting with '#' are skipped.
inline std::vector<RewriteStep> parse_script(const std::string& text) {
  std::vector<RewriteStep> steps;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    steps.push_back(parse_step(line, line_no));
  }
  return steps;
}

inline std::string format_script(const std::vector<RewriteStep>& steps) {
  std::string out;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    out += format_step(k + 1, steps[k]) + "\n";
  }
  return out;
}

/// Applies the steps in order, returning every intermediate diagram
/// (the start included).
inline std::vector<Diagram> replay(const Diagram& start,
                                   const std::vector<RewriteStep>& steps) {
  std::vector<Diagram> states{start};
  for (const RewriteStep& s : steps) states.push_back(apply_step(states.back(), s));
  return states;
}

// ---------------------------------------------------------------------------
// Random rewriting
// ---------------------------------------------------------------------------

namespace rewrite_detail {

using Infer = std::function<std::optional<RuleParams>(const Diagram&,
                                                      std::mt19937_64&)>;

struct Candidate {
  std::string rule;
  Direction direction;
  Infer infer;
};

inline const Spider* spider_leaf(const Diagram& d) {
  return d.is_leaf() ? d.as<Spider>() : nullptr;
}

inline ParamValue colour_value(Colour c) { return ParamValue(c); }

inline std::vector<Candidate> candidates() {
  std::vector<Candidate> out;
  out.push_back({"W2", Direction::L2R, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (const auto* id = d.as<Identity>()) {
                     p.emplace().set("n", id->size);
                   }
                   return p;
                 }});
  out.push_back({"W2", Direction::R2L, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (d.kind() == Diagram::Kind::Seq && d.child(0).as<Hadamard>()) {
                     p.emplace().set("n", d.in_type()[0]);
                   }
                   return p;
                 }});
  out.push_back({"W1", Direction::R2L, [](const Diagram& d, std::mt19937_64& rng) {
                   std::optional<RuleParams> p;
                   if (const auto* id = d.as<Identity>()) {
                     p.emplace().set("n", id->size);
                     p->set("colour", colour_value(rng() % 2 ? Colour::Red : Colour::Green));
                   }
                   return p;
                 }});
  out.push_back({"W1", Direction::L2R, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (const auto* s = spider_leaf(d)) {
                     if (s->inputs == 1 && s->outputs == 1) {
                       p.emplace().set("n", s->size);
                       p->set("colour", colour_value(s->colour));
                     }
                   }
                   return p;
                 }});
  out.push_back({"E", Direction::R2L, [](const Diagram& d, std::mt19937_64& rng) {
                   std::optional<RuleParams> p;
                   if (const auto* id = d.as<Identity>(); id && id->size > 1) {
                     const std::size_t a = 1 + rng() % (id->size - 1);
                     p.emplace().set("n", a).set("m", id->size - a);
                   }
                   return p;
                 }});
  out.push_back({"E", Direction::L2R, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (d.kind() == Diagram::Kind::Seq) {
                     if (const auto* v = d.child(0).as<Divider>()) {
                       p.emplace().set("n", v->first).set("m", v->second);
                     }
                   }
                   return p;
                 }});
  out.push_back({"P", Direction::L2R, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (d.kind() == Diagram::Kind::Seq) {
                     if (const auto* g = d.child(0).as<Gatherer>()) {
                       p.emplace().set("n", g->first).set("m", g->second);
                     }
                   }
                   return p;
                 }});
  out.push_back({"h", Direction::R2L, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (const auto* s = spider_leaf(d)) {
                     p.emplace().set("n", s->size).set("k", s->inputs);
                     p->set("l", s->outputs).set("alpha", ParamValue(s->phases));
                     p->set("colour", colour_value(other(s->colour)));
                   }
                   return p;
                 }});
  out.push_back({"H'", Direction::R2L, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (const auto* s = spider_leaf(d);
                       s && s->inputs == 1 && s->outputs == 1) {
                     p.emplace().set("n", s->size).set("alpha", ParamValue(s->phases));
                     p->set("colour", colour_value(other(s->colour)));
                   }
                   return p;
                 }});
  out.push_back({"S", Direction::R2L, [](const Diagram& d, std::mt19937_64& rng) {
                   std::optional<RuleParams> p;
                   if (const auto* s = spider_leaf(d)) {
                     std::uniform_real_distribution<double> u(0, 2 * kPi);
                     PhaseVector a(s->size), b(s->size);
                     for (std::size_t i = 0; i < s->size; ++i) {
                       a[i] = u(rng);
                       b[i] = s->phases[i] - a[i];
                     }
                     p.emplace().set("n", s->size).set("k", s->inputs);
                     p->set("l", s->outputs).set("alpha", ParamValue(a));
                     p->set("beta", ParamValue(b)).set("colour", colour_value(s->colour));
                   }
                   return p;
                 }});
  out.push_back({"S", Direction::L2R, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (d.kind() != Diagram::Kind::Seq) return p;
                   const auto* s = spider_leaf(d.child(0));
                   const auto* t = spider_leaf(d.child(1));
                   if (s && t && s->colour == t->colour && s->outputs == 1 &&
                       t->inputs == 1) {
                     p.emplace().set("n", s->size).set("k", s->inputs);
                     p->set("l", t->outputs).set("alpha", ParamValue(s->phases));
                     p->set("beta", ParamValue(t->phases));
                     p->set("colour", colour_value(s->colour));
                   }
                   return p;
                 }});
  out.push_back({"s2", Direction::R2L, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (d.as<EmptyScalar>()) p.emplace().set("n", 1);
                   return p;
                 }});
  out.push_back({"B", Direction::L2R, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (const auto* m = d.as<MatrixBox>(); m && m->forward) {
                     p.emplace().set("A", m->matrix);
                   }
                   return p;
                 }});
  out.push_back({"1", Direction::R2L, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (const auto* id = d.as<Identity>(); id && id->size <= 3) {
                     p.emplace().set("n", id->size);
                   }
                   return p;
                 }});
  out.push_back({"m", Direction::L2R, [](const Diagram& d, auto&) {
                   std::optional<RuleParams> p;
                   if (d.kind() != Diagram::Kind::Seq) return p;
                   const auto* a = d.child(0).as<MatrixBox>();
                   const auto* c = d.child(1).as<MatrixBox>();
                   if (a && c && a->forward && c->forward) {
                     p.emplace().set("A", a->matrix).set("C", c->matrix);
                   }
                   return p;
                 }});
  return out;
}

}  // namespace rewrite_detail

/// A sound rewrite step that applies somewhere in d, found by trying the
/// built-in candidate rules at random positions. nullopt if none applies.
inline std::optional<RewriteStep> random_rewrite(const Diagram& d,
                                                 std::mt19937_64& rng) {
  static const auto pool = rewrite_detail::candidates();
  std::vector<std::pair<Path, Diagram>> nodes;
  for_each_node(d, [&](const Path& p, const Diagram& n) { nodes.emplace_back(p, n); });
  std::vector<std::size_t> order(nodes.size() * pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t idx : order) {
    const auto& [path, node] = nodes[idx / pool.size()];
    const auto& cand = pool[idx % pool.size()];
    const auto params = cand.infer(node, rng);
    if (!params) continue;
    try {
      const RuleInstance inst = instantiate(cand.rule, *params);
      const Diagram& side = cand.direction == Direction::L2R ? inst.lhs : inst.rhs;
      if (side == node) return RewriteStep{cand.rule, cand.direction, path, *params};
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace szx
