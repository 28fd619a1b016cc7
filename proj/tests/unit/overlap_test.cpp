// Copyright 2026 The nashcd Authors
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

#include <cmath>

#include "fixtures.hpp"
#include "nashcd/error.hpp"
#include "nashcd/graph_io.hpp"
#include "nashcd/louvain.hpp"
#include "nashcd/overlap.hpp"

namespace nashcd {
namespace {

TEST(Legitimacy, TriangleAllMode) {
  const Graph g = testing::triangle();
  const Partition p = Partition::single_community(g);
  const auto l = legitimacy(g, p, 0, 0, LegitimacyMode::kAll);
  EXPECT_DOUBLE_EQ(l.value, 1.0);
  EXPECT_FALSE(l.empty_denominator);
}

TEST(Legitimacy, OutsiderCountsWholeCommunity) {
  const Graph g = testing::triangle_plus_edge();
  const Partition p = testing::triangle_plus_edge_split(g);
  EXPECT_DOUBLE_EQ(legitimacy(g, p, 3, 0, LegitimacyMode::kAll).value, 0.0);
  EXPECT_DOUBLE_EQ(legitimacy(g, p, 3, 1, LegitimacyMode::kAll).value, 1.0);
  EXPECT_DOUBLE_EQ(legitimacy(g, p, 0, 1, LegitimacyMode::kAll).value, 0.0);
}

TEST(Legitimacy, SingletonHasEmptyDenominator) {
  const Graph g = testing::triangle();
  const Partition p = Partition::singletons(g);
  const auto l = legitimacy(g, p, 0, 0, LegitimacyMode::kAll);
  EXPECT_EQ(l.value, 0.0);
  EXPECT_TRUE(l.empty_denominator);
}

TEST(Legitimacy, IsolatedVertexIsZeroEverywhere) {
  const Graph g = Graph::from_edges({{{0, 1}, {1, 2}, {2, 0}}}, 4);
  const Partition p(g, {0, 0, 1, 1});
  for (CommunityId c : {0u, 1u}) {
    EXPECT_EQ(legitimacy(g, p, 3, c, LegitimacyMode::kAll).value, 0.0);
  }
}

TEST(Legitimacy, FullMembershipOppositeMode) {
  // u0 linked to v0, v1, v2, all in its own community.
  const auto b = BipartiteGraph::from_edges({{{0, 0}, {0, 1}, {0, 2}, {1, 2}}}, 2, 3);
  const Graph g = to_block_unipartite(b);
  const Partition p(g, {0, 1, 0, 0, 0});
  EXPECT_DOUBLE_EQ(legitimacy(g, p, 0, 0, LegitimacyMode::kOpposite).value, 1.0);
  // v2 sees u0 of the single U member in community 0
  EXPECT_DOUBLE_EQ(legitimacy(g, p, 4, 0, LegitimacyMode::kOpposite).value, 1.0);
  EXPECT_DOUBLE_EQ(legitimacy(g, p, 4, 1, LegitimacyMode::kOpposite).value, 1.0);
  EXPECT_TRUE(legitimacy(g, p, 1, 1, LegitimacyMode::kOpposite).empty_denominator);
}

TEST(Legitimacy, OppositeModeNeedsBlockGraph) {
  const Graph g = testing::triangle();
  EXPECT_THROW(legitimacy(g, Partition::single_community(g), 0, 0,
                          LegitimacyMode::kOpposite),
               Error);
  EXPECT_EQ(default_legitimacy_mode(g), LegitimacyMode::kAll);
}

TEST(Legitimacy, DeadCommunityRejected) {
  const Graph g = testing::triangle();
  EXPECT_THROW(legitimacy(g, Partition(g, {0, 0, 0}, 2), 0, 1,
                          LegitimacyMode::kAll),
               Error);
}

TEST(Legitimacy, SouthernWomenSeedColumns) {
  const auto g = read_graph_file(testing::data_path("southern_women.txt"));
  EXPECT_EQ(default_legitimacy_mode(g.graph), LegitimacyMode::kOpposite);
  const Partition p = louvain(g.graph);
  const auto m = legitimacy_matrix(g.graph, p, LegitimacyMode::kOpposite);
  ASSERT_EQ(m.row_count(), 3u);
  // W1 attends six of the seven events of the first community.
  EXPECT_DOUBLE_EQ(m.at(0, 0), 6.0 / 7.0);
  EXPECT_DOUBLE_EQ(m.at(1, 0), 1.0 / 5.0);
  EXPECT_DOUBLE_EQ(m.at(2, 0), 1.0 / 2.0);
  EXPECT_EQ(m.argmax(0), m.communities()[0]);
  // W9 carries the 2/7, 1/5, 1/2 profile.
  EXPECT_DOUBLE_EQ(m.at(0, 8), 2.0 / 7.0);
  EXPECT_DOUBLE_EQ(m.at(1, 8), 1.0 / 5.0);
  EXPECT_DOUBLE_EQ(m.at(2, 8), 1.0 / 2.0);
  EXPECT_EQ(m.argmax(8), m.communities()[2]);
}

TEST(LegitimacyMatrix, KarateShape) {
  const auto g = read_graph_file(testing::data_path("karate.txt"));
  const Partition p = louvain(g.graph);
  const auto m = legitimacy_matrix(g.graph, p, LegitimacyMode::kAll);
  EXPECT_EQ(m.row_count(), 4u);
  EXPECT_EQ(m.vertex_count(), 34u);
  for (std::size_t r = 0; r < 4; ++r) {
    for (double x : m.row(r)) {
      EXPECT_TRUE(std::isfinite(x));
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
  }
  for (VertexId v = 0; v < 34; ++v) EXPECT_NE(m.argmax(v), kNoCommunity);
}

TEST(LegitimacyMatrix, EdgelessGraphIsAllZero) {
  const Graph g = Graph::from_edges({}, 4);
  const auto m = legitimacy_matrix(g, Partition(g, {0, 0, 1, 1}),
                                   LegitimacyMode::kAll);
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    for (double x : m.row(r)) EXPECT_EQ(x, 0.0);
  }
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(m.argmax(v), kNoCommunity);
}

TEST(LegitimacyMatrix, RowMatchesPointQueries) {
  std::mt19937_64 rng(71);
  const Graph g = testing::random_graph(rng, 20, 0.25);
  const Partition p = testing::random_partition(rng, g, 4);
  const auto m = legitimacy_matrix(g, p, LegitimacyMode::kAll);
  std::size_t empty = 0;
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    for (VertexId v = 0; v < 20; ++v) {
      const auto l = legitimacy(g, p, v, m.communities()[r], LegitimacyMode::kAll);
      EXPECT_DOUBLE_EQ(m.at(r, v), l.value);
      empty += l.empty_denominator;
    }
  }
  EXPECT_EQ(m.empty_denominators(), empty);
}

}  // namespace
}  // namespace nashcd
