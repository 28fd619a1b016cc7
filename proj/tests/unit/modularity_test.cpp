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

#include <random>

#include "fixtures.hpp"
#include "nashcd/error.hpp"
#include "nashcd/graph_io.hpp"
#include "nashcd/louvain.hpp"
#include "nashcd/modularity.hpp"
#include "nashcd/oracle.hpp"

namespace nashcd {
namespace {

TEST(Modularity, SingleCommunityIsZero) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const Graph g = testing::random_graph(rng, 15, 0.3);
    EXPECT_NEAR(modularity(g, Partition::single_community(g)), 0.0, 1e-15);
  }
}

TEST(Modularity, TrianglePlusEdge) {
  const Graph g = testing::triangle_plus_edge();
  const Partition p = testing::triangle_plus_edge_split(g);
  EXPECT_DOUBLE_EQ(modularity(g, p), 0.375);
  EXPECT_NEAR(modularity_pairwise_oracle(g, p), 0.375, 1e-12);
  // 4m * E - S = 16 * 4 - (36 + 4)
  EXPECT_EQ(modularity_numerator(p), 24);
}

TEST(Modularity, EdgelessGraphIsZero) {
  const Graph g = Graph::from_edges({}, 3);
  std::string warned;
  set_warning_handler([&](std::string_view m) { warned = m; });
  EXPECT_EQ(modularity(g, Partition::singletons(g)), 0.0);
  set_warning_handler({});
  EXPECT_FALSE(warned.empty());
}

TEST(Modularity, ForeignPartitionRejected) {
  const Graph a = testing::triangle();
  const Graph b = testing::two_triangles();
  EXPECT_THROW(modularity(b, Partition::singletons(a)), Error);
}

TEST(Modularity, MatchesPairwiseOracle) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(rng, 4 + i % 27, 0.2);
    const Partition p = testing::random_partition(rng, g, 1 + i % 6);
    EXPECT_NEAR(modularity(g, p), modularity_pairwise_oracle(g, p), 1e-12);
  }
}

TEST(Modularity, KarateLouvainMatchesOracle) {
  const auto g = read_graph_file(testing::data_path("karate.txt"));
  const Partition p = louvain(g.graph);
  EXPECT_NEAR(modularity(g.graph, p), modularity_pairwise_oracle(g.graph, p),
              1e-12);
}

TEST(Bipartite, TwoDisjointEdges) {
  const auto b = BipartiteGraph::from_edges({{{0, 0}, {1, 1}}}, 2, 2);
  const Graph g = to_block_unipartite(b);
  const Partition p(g, {0, 1, 0, 1});
  EXPECT_DOUBLE_EQ(bipartite_modularity(b, p), 0.5);
  EXPECT_DOUBLE_EQ(modularity(g, p), 0.5);
}

TEST(Bipartite, OneCommunityIsZero) {
  std::mt19937_64 rng(4);
  const auto b = testing::random_bipartite(rng, 6, 7, 0.4);
  const Graph g = to_block_unipartite(b);
  EXPECT_NEAR(bipartite_modularity(b, Partition::single_community(g)), 0.0,
              1e-15);
}

TEST(Bipartite, MatchesBlockModularity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto b = testing::random_bipartite(rng, 3 + i % 9, 2 + i % 11, 0.3);
    if (b.edge_count() == 0) continue;
    const Graph g = to_block_unipartite(b);
    const Partition p = testing::random_partition(rng, g, 1 + i % 5);
    EXPECT_NEAR(bipartite_modularity(b, p), modularity(g, p), 1e-12);
  }
}

TEST(BruteForce, Triangle) {
  const Graph g = testing::triangle();
  const auto best = brute_force_best_partition(g);
  EXPECT_EQ(best.partition.live_count(), 1u);
  EXPECT_NEAR(best.modularity, 0.0, 1e-15);
}

TEST(BruteForce, SingleEdge) {
  const Graph g = Graph::from_edges({{{0, 1}}});
  const auto best = brute_force_best_partition(g);
  EXPECT_EQ(best.partition.live_count(), 1u);
  EXPECT_NEAR(best.modularity, 0.0, 1e-15);
}

TEST(BruteForce, TwoTrianglesAndBridge) {
  const Graph g = testing::two_triangles();
  const auto best = brute_force_best_partition(g);
  EXPECT_EQ(best.partition.assignment(),
            (std::vector<CommunityId>{0, 0, 0, 1, 1, 1}));
  // 2 * (3/7 - (7/14)^2)
  EXPECT_NEAR(best.modularity, 5.0 / 14.0, 1e-15);
}

TEST(BruteForce, NoPartitionBeatsIt) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    const Graph g = testing::random_graph(rng, 7, 0.35);
    if (g.edge_count() == 0) continue;
    const auto best = brute_force_best_partition(g);
    EXPECT_NEAR(best.modularity, modularity(g, best.partition), 1e-15);
    for (int k = 0; k < 200; ++k) {
      const Partition p = testing::random_partition(rng, g, 1 + k % 7);
      EXPECT_LE(modularity(g, p), best.modularity + 1e-12);
    }
  }
}

TEST(BruteForce, RefusesLargeGraphs) {
  const Graph g = Graph::from_edges({}, kBruteForceMaxVertices + 1);
  EXPECT_THROW(brute_force_best_partition(g), Error);
}

}  // namespace
}  // namespace nashcd
