// Copyright 2026 The Arbocount Authors.
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

#include "arbocount/edge_list.h"

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.h"

namespace arbocount {
namespace {

TEST(EdgeListTest, ReadsPlainPairs) {
  std::istringstream in("# comment\n0 1\n1 2\n\n2 0\n");
  const Graph g = ReadEdgeList(in);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
}

TEST(EdgeListTest, DetectsHeaderWithIsolatedVertices) {
  std::istringstream in("6 2\n0 1\n1 2\n");
  const Graph g = ReadEdgeList(in);
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(EdgeListTest, FirstLineThatIsAnEdgeIsNotAHeader) {
  // "3 4" cannot be a header: the body has one line, not four.
  std::istringstream in("3 4\n0 1\n");
  const Graph g = ReadEdgeList(in);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(EdgeListTest, RejectsMalformedLines) {
  std::istringstream three("0 1 2\n");
  EXPECT_THROW(ReadEdgeList(three), std::invalid_argument);
  std::istringstream neg("0 -1\n");
  EXPECT_THROW(ReadEdgeList(neg), std::invalid_argument);
  std::istringstream word("a b\n");
  EXPECT_THROW(ReadEdgeList(word), std::invalid_argument);
  std::istringstream loop("2 2\n");
  EXPECT_THROW(ReadEdgeList(loop), std::invalid_argument);
}

TEST(EdgeListTest, RoundTripPreservesGraph) {
  const Graph g = testing::RandomGraph(30, 0.1, 9);
  std::stringstream buf;
  WriteEdgeList(g, buf);
  const Graph h = ReadEdgeList(buf);
  EXPECT_EQ(h.num_vertices(), g.num_vertices());
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(EdgeListTest, MissingFileThrows) {
  EXPECT_THROW(ReadEdgeListFile("/nonexistent/graph.el"), std::runtime_error);
}

}  // namespace
}  // namespace arbocount
