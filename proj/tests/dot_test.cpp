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

#include <string>

#include "szx/dot.hpp"
#include "szx/dsl.hpp"

namespace szx {
namespace {

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) ++n;
  return n;
}

TEST(Dot, StylesEachGeneratorKind) {
  const std::string dot = export_dot(parse_diagram(
      "(seq (gz 1 2 2 0 0) (par (h 2) (seq (div 1 1) (gath 1 1))))"));
  EXPECT_EQ(dot.rfind("graph szx {", 0), 0U);
  EXPECT_EQ(count(dot, "fillcolor=green"), 1U);
  EXPECT_EQ(count(dot, "fillcolor=yellow"), 1U);
  EXPECT_EQ(count(dot, "shape=triangle"), 1U);
  EXPECT_EQ(count(dot, "shape=invtriangle"), 1U);
  EXPECT_EQ(count(dot, "shape=plaintext"), 3U);
}

TEST(Dot, EdgesCarryRegisterSizes) {
  const std::string dot =
      export_dot(parse_diagram("(seq (mat FWD \"11\") (gx 1 0 1 pi))"));
  EXPECT_EQ(count(dot, "shape=box"), 1U);
  EXPECT_EQ(count(dot, "fillcolor=red"), 1U);
  EXPECT_EQ(count(dot, " -- "), 2U);
  EXPECT_EQ(count(dot, "[label=\"2\"]"), 1U);
}

TEST(Dot, ClosedLoopHasNoNodes) {
  const std::string dot = export_dot(parse_diagram("(seq (cup 2) (cap 2))"));
  EXPECT_EQ(count(dot, " -- "), 0U);
  EXPECT_EQ(count(dot, "shape="), 0U);
}

}  // namespace
}  // namespace szx
