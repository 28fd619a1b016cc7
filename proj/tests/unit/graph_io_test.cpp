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

#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "nashcd/error.hpp"
#include "nashcd/graph_io.hpp"
#include "nashcd/louvain.hpp"
#include "nashcd/modularity.hpp"

namespace nashcd {
namespace {

LoadedGraph parse(const std::string& text, GraphKind kind = GraphKind::kAuto) {
  std::istringstream in(text);
  return parse_graph(in, kind);
}

std::size_t error_line(const std::string& text,
                       GraphKind kind = GraphKind::kAuto) {
  try {
    parse(text, kind);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(Parse, CommentsBlankLinesAndWeights) {
  const auto g = parse("# c\n\n0 1\n1 2 1\n  2 0\t\n");
  EXPECT_EQ(g.kind, GraphKind::kUnipartite);
  EXPECT_EQ(g.graph.edge_count(), 3u);
}

TEST(Parse, UnipartiteHeaderSetsSize) {
  const auto g = parse("%unipartite 5\n0 1\n");
  EXPECT_EQ(g.graph.vertex_count(), 5u);
}

TEST(Parse, BipartiteHeader) {
  const auto g = parse("%bipartite 2 3\n0 0\n1 2\n");
  EXPECT_EQ(g.kind, GraphKind::kBipartite);
  ASSERT_TRUE(g.bipartite);
  EXPECT_EQ(g.bipartite->v_count(), 3u);
  EXPECT_EQ(g.graph.vertex_count(), 5u);
  EXPECT_TRUE(g.graph.has_edge(1, 4));
}

TEST(Parse, BipartiteWithoutHeaderInfersSides) {
  const auto g = parse("0 0\n2 1\n", GraphKind::kBipartite);
  ASSERT_TRUE(g.bipartite);
  EXPECT_EQ(g.bipartite->u_count(), 3u);
  EXPECT_EQ(g.bipartite->v_count(), 2u);
}

TEST(Parse, DirectedDropsSelfLoops) {
  const auto g = parse("%directed 3\n0 1\n1 1\n2 0\n");
  EXPECT_EQ(g.kind, GraphKind::kDirected);
  EXPECT_EQ(g.dropped_self_loops, 1u);
  EXPECT_EQ(g.graph.vertex_count(), 6u);
  EXPECT_EQ(g.graph.edge_count(), 2u);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("0 1\n1 x\n"), 2u);
  EXPECT_EQ(error_line("0 1\n1 2 3 4\n"), 2u);
  EXPECT_EQ(error_line("0 1\n\n2 2\n"), 3u);
  EXPECT_EQ(error_line("0 1 2\n"), 1u);
  EXPECT_EQ(error_line("%unipartite 2\n0 2\n"), 2u);
  EXPECT_EQ(error_line("0 1\n%unipartite 3\n"), 2u);
  EXPECT_EQ(error_line("%bipartite 2 2\n%bipartite 2 2\n"), 2u);
  EXPECT_EQ(error_line("%weird 2\n"), 1u);
  EXPECT_EQ(error_line("%bipartite 2\n"), 1u);
  EXPECT_EQ(error_line("-1 2\n"), 1u);
  EXPECT_EQ(error_line("%bipartite 2 2\n0 1\n", GraphKind::kDirected), 1u);
}

TEST(Parse, EmptyInputIsParseError) {
  EXPECT_EQ(error_line(""), 0u);
  EXPECT_EQ(error_line("# only a comment\n\n"), 0u);
}

TEST(Parse, HeaderOnlyIsEmptyGraph) {
  const auto g = parse("%unipartite 3\n");
  EXPECT_EQ(g.graph.vertex_count(), 3u);
  EXPECT_EQ(g.graph.edge_count(), 0u);
}

TEST(Parse, GraphKindNames) {
  for (auto k : {GraphKind::kAuto, GraphKind::kUnipartite,
                 GraphKind::kBipartite, GraphKind::kDirected}) {
    EXPECT_EQ(parse_graph_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_graph_kind("tripartite"));
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(5);
  const Graph g = testing::random_graph(rng, 20, 0.3);
  std::ostringstream out;
  write_edge_list(out, g);
  const auto back = parse(out.str());
  EXPECT_EQ(back.graph, g);
}

TEST(Labels, Defaults) {
  const auto uni = parse("0 1\n");
  EXPECT_EQ(default_labels(uni), (std::vector<std::string>{"0", "1"}));
  const auto bi = parse("%bipartite 1 2\n0 1\n");
  EXPECT_EQ(default_labels(bi), (std::vector<std::string>{"u0", "v0", "v1"}));
  const auto di = parse("%directed 2\n0 1\n");
  EXPECT_EQ(default_labels(di),
            (std::vector<std::string>{"0:out", "1:out", "0:in", "1:in"}));
}

TEST(Labels, SidecarFile) {
  const auto g = read_graph_file(testing::data_path("southern_women.txt"));
  const auto labels =
      read_labels(testing::data_path("southern_women.labels"), g);
  ASSERT_EQ(labels.size(), 32u);
  EXPECT_EQ(labels[0], "W1");
  EXPECT_EQ(labels[17], "W18");
  EXPECT_EQ(labels[18], "E1");
  EXPECT_EQ(labels[31], "E14");
}

TEST(PartitionFile, RoundTripKeepsModularity) {
  const auto g = read_graph_file(testing::data_path("karate.txt"));
  const Partition p = louvain(g.graph);
  const auto labels = default_labels(g);
  std::ostringstream out;
  write_partition(out, p, labels);
  std::istringstream in(out.str());
  const Partition back(g.graph, read_partition(in, labels));
  EXPECT_EQ(back.assignment(), p.assignment());
  EXPECT_NEAR(modularity(g.graph, back), modularity(g.graph, p), 1e-12);
}

TEST(PartitionFile, LabelMismatchRejected) {
  const std::vector<std::string> labels = {"a", "b"};
  std::istringstream in("a\t0\nc\t0\n");
  EXPECT_THROW(read_partition(in, labels), ParseError);
  std::istringstream short_in("a\t0\n");
  EXPECT_THROW(read_partition(short_in, labels), ParseError);
}

}  // namespace
}  // namespace nashcd
