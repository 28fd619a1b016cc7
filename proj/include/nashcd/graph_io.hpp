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

#ifndef NASHCD_GRAPH_IO_HPP_
#define NASHCD_GRAPH_IO_HPP_

// Edge-list text format:
//
//   # comment
//   %bipartite <r> <s>     (or %directed <n>, or %unipartite <n>)
//   <i> <j> [1]
//
// One edge per line, whitespace separated, non-negative integer ids. The
// optional third column is a weight and must be 1. At most one header line,
// and it must precede the first edge.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nashcd/graph.hpp"
#include "nashcd/partition.hpp"

namespace nashcd {

enum class GraphKind { kAuto, kUnipartite, kBipartite, kDirected };

std::string_view to_string(GraphKind kind) noexcept;
/// Accepts "auto", "unipartite", "bipartite", "directed".
std::optional<GraphKind> parse_graph_kind(std::string_view text) noexcept;

struct LoadedGraph {
  GraphKind kind = GraphKind::kUnipartite;
  // The graph every algorithm runs on: the input itself for unipartite
  // files, the block graph otherwise.
  Graph graph;
  // Biadjacency for bipartite and directed input.
  std::optional<BipartiteGraph> bipartite;
  std::size_t dropped_self_loops = 0;
};

/// `requested` other than kAuto must agree with the header if there is one.
/// Without a header, bipartite sizes and the directed vertex count are
/// inferred from the largest ids. Throws ParseError.
LoadedGraph parse_graph(std::istream& in, GraphKind requested = GraphKind::kAuto);
LoadedGraph read_graph_file(const std::filesystem::path& path,
                            GraphKind requested = GraphKind::kAuto);

/// "<i>" for unipartite graphs, "u<i>" / "v<j>" for bipartite ones and
/// "<i>:out" / "<i>:in" for directed ones.
std::vector<std::string> default_labels(const LoadedGraph& graph);

/// Reads "<id> <label>" lines ('#' comments allowed) on top of the default
/// labels. Ids are working-graph vertex ids, except for directed input where
/// they name original vertices and expand to "<label>:out" / "<label>:in".
std::vector<std::string> read_labels(const std::filesystem::path& path,
                                     const LoadedGraph& graph);

/// Every edge once as "u v", ascending; parse_graph reads it back unchanged.
void write_edge_list(std::ostream& out, const Graph& graph);

/// One "<label>\t<community>" line per vertex, ascending vertex id.
void write_partition(std::ostream& out, const Partition& partition,
                     const std::vector<std::string>& labels);

/// Reads the format above; line i must carry labels[i].
std::vector<CommunityId> read_partition(std::istream& in,
                                        const std::vector<std::string>& labels);

}  // namespace nashcd

#endif  // NASHCD_GRAPH_IO_HPP_
