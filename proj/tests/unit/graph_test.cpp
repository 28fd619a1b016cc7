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

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "nashcd/error.hpp"
#include "nashcd/graph.hpp"
#include "nashcd/graph_io.hpp"
#include "nashcd/partition.hpp"

namespace nashcd {
namespace {

using testing::data_path;

TEST(Graph, Triangle) {
  const Graph g = testing::triangle();
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(Graph, DuplicateInEitherOrientationCollapses) {
  const Graph g = Graph::from_edges({{{0, 1}, {1, 0}}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(Graph, SelfLoopRejected) {
  EXPECT_THROW(Graph::from_edges({{{0, 0}}}), Error);
}

TEST(Graph, VertexCountCanExceedIds) {
  const Graph g = Graph::from_edges({{{0, 1}}}, 5);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.degree(4), 0u);
}

TEST(Graph, RandomInvariants) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 25, 0.2);
    std::size_t degrees = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      degrees += g.degree(v);
      const auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      for (VertexId w : nb) {
        EXPECT_NE(w, v);
        EXPECT_TRUE(g.has_edge(w, v));
      }
    }
    EXPECT_EQ(degrees, 2 * g.edge_count());
    EXPECT_EQ(Graph::from_edges(g.edges(), g.vertex_count()), g);
  }
}

TEST(Bipartite, PathMargins) {
  const auto b = BipartiteGraph::from_edges({{{0, 0}, {0, 1}}}, 1, 2);
  EXPECT_EQ(b.row_margins(), (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(b.col_margins(), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(b.edge_count(), 2u);
}

TEST(Bipartite, EmptyGraph) {
  const auto b = BipartiteGraph::from_edges({}, 2, 2);
  EXPECT_EQ(b.edge_count(), 0u);
  EXPECT_EQ(b.row_margins(), (std::vector<std::uint32_t>{0, 0}));
  const Graph g = to_block_unipartite(b);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Bipartite, OutOfRangeRejected) {
  EXPECT_THROW(BipartiteGraph::from_edges({{{0, 2}}}, 1, 2), Error);
}

TEST(Bipartite, BlockGraphIsStar) {
  const auto b = BipartiteGraph::from_edges({{{0, 0}, {0, 1}}}, 1, 2);
  const Graph g = to_block_unipartite(b);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(0, 2));
  ASSERT_TRUE(g.block_layout().has_value());
  EXPECT_EQ(g.block_layout()->u_count, 1u);
}

TEST(Bipartite, MarginsSumToEdges) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = testing::random_bipartite(rng, 9, 13, 0.3);
    const auto& r = b.row_margins();
    const auto& c = b.col_margins();
    EXPECT_EQ(std::accumulate(r.begin(), r.end(), std::size_t{0}), b.edge_count());
    EXPECT_EQ(std::accumulate(c.begin(), c.end(), std::size_t{0}), b.edge_count());
    const Graph g = to_block_unipartite(b);
    EXPECT_EQ(g.edge_count(), b.edge_count());
    for (VertexId u = 0; u < 9; ++u) {
      for (VertexId w : g.neighbors(u)) EXPECT_GE(w, 9u);
    }
  }
}

TEST(Directed, SingleArc) {
  const auto red = directed_to_bipartite({{{0, 1}}}, 2);
  EXPECT_EQ(red.graph.u_count(), 2u);
  EXPECT_EQ(red.graph.v_count(), 2u);
  EXPECT_EQ(red.graph.edge_count(), 1u);
  EXPECT_TRUE(red.graph.has_edge(0, 1));
  EXPECT_FALSE(red.graph.has_edge(1, 0));
}

TEST(Directed, TwoCycle) {
  const auto red = directed_to_bipartite({{{0, 1}, {1, 0}}}, 2);
  EXPECT_EQ(red.graph.edge_count(), 2u);
  EXPECT_TRUE(red.graph.has_edge(0, 1));
  EXPECT_TRUE(red.graph.has_edge(1, 0));
}

TEST(Directed, SelfLoopDropped) {
  const auto red = directed_to_bipartite({{{0, 0}}}, 1);
  EXPECT_EQ(red.graph.edge_count(), 0u);
  EXPECT_EQ(red.dropped_self_loops, 1u);
}

TEST(Datasets, Karate) {
  const auto g = read_graph_file(data_path("karate.txt"));
  EXPECT_EQ(g.kind, GraphKind::kUnipartite);
  EXPECT_EQ(g.graph.vertex_count(), 34u);
  EXPECT_EQ(g.graph.edge_count(), 78u);
}

TEST(Datasets, Dolphins) {
  const auto g = read_graph_file(data_path("dolphins.txt"));
  EXPECT_EQ(g.graph.vertex_count(), 62u);
  EXPECT_EQ(g.graph.edge_count(), 159u);
}

TEST(Datasets, SouthernWomen) {
  const auto g = read_graph_file(data_path("southern_women.txt"));
  EXPECT_EQ(g.kind, GraphKind::kBipartite);
  ASSERT_TRUE(g.bipartite.has_value());
  EXPECT_EQ(g.bipartite->u_count(), 18u);
  EXPECT_EQ(g.bipartite->v_count(), 14u);
  EXPECT_EQ(g.bipartite->edge_count(), 89u);
  EXPECT_EQ(g.graph.vertex_count(), 32u);
  EXPECT_EQ(g.graph.edge_count(), 89u);
}

TEST(Partition, AggregatesMatchRecount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_graph(rng, 20, 0.25);
    Partition p = testing::random_partition(rng, g, 5);
    p.audit(g);
    std::uniform_int_distribution<VertexId> pick_v(0, 19);
    std::uniform_int_distribution<CommunityId> pick_c(0, 4);
    for (int k = 0; k < 40; ++k) {
      p.move(g, pick_v(rng), pick_c(rng));
      p.audit(g);
    }
    std::uint64_t deg = 0, edges = 0;
    for (CommunityId c = 0; c < p.community_count(); ++c) {
      deg += p.total_degree(c);
      edges += p.internal_edges(c);
    }
    EXPECT_EQ(deg, 2 * g.edge_count());
    EXPECT_LE(edges, g.edge_count());
    EXPECT_EQ(edges, p.internal_edge_total());
  }
}

TEST(Partition, MoveRoundTripRestores) {
  const Graph g = testing::two_triangles();
  Partition p(g, {0, 0, 0, 1, 1, 1});
  const Partition before = p;
  p.move(g, 2, 1);
  EXPECT_NE(p, before);
  p.move(g, 2, 0);
  EXPECT_EQ(p, before);
}

TEST(Partition, EmptiedCommunityIsNotLive) {
  const Graph g = testing::triangle_plus_edge();
  Partition p = testing::triangle_plus_edge_split(g);
  p.move(g, 3, 0);
  p.move(g, 4, 0);
  EXPECT_FALSE(p.is_live(1));
  EXPECT_EQ(p.live_count(), 1u);
  EXPECT_EQ(p.compacted().community_count(), 1u);
}

TEST(Partition, RejectsWrongLengthAndIds) {
  const Graph g = testing::triangle();
  EXPECT_THROW(Partition(g, {0, 0}), Error);
  EXPECT_THROW(Partition(g, {0, 0, 3}), Error);
  EXPECT_NO_THROW(Partition(g, {0, 0, 3}, 4));
}

TEST(Partition, LinksToCommunity) {
  const Graph g = testing::triangle();
  const Partition p = Partition::single_community(g);
  EXPECT_EQ(links_to_community(g, p, 0, 0), 2u);
  const Graph te = testing::triangle_plus_edge();
  const Partition q = testing::triangle_plus_edge_split(te);
  EXPECT_EQ(links_to_community(te, q, 3, 0), 0u);
  EXPECT_EQ(links_to_community(te, q, 3, 1), 1u);
}

}  // namespace
}  // namespace nashcd
