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

#ifndef NASHCD_GRAPH_HPP_
#define NASHCD_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nashcd {

using VertexId = std::uint32_t;
using CommunityId = std::uint32_t;

inline constexpr CommunityId kNoCommunity = static_cast<CommunityId>(-1);

// Upper bound on the edge count. All modularity arithmetic is carried out on
// 64-bit integer numerators over (2m)^2, which stays exact below this.
inline constexpr std::size_t kMaxEdges = std::size_t{1} << 30;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Layout of a unipartite graph built from a bipartite one: ids [0, u_count)
// are U vertices, ids [u_count, u_count + v_count) are V vertices.
struct BlockLayout {
  std::size_t u_count = 0;
  std::size_t v_count = 0;

  bool is_u(VertexId v) const noexcept { return v < u_count; }

  friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

/// Immutable simple undirected graph with binary edge weights, stored as
/// sorted adjacency lists (CSR).
class BipartiteGraph;

class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse to one; self-loops are rejected. The vertex count
  /// is max(max id + 1, `vertex_count`), so unmentioned ids are isolated.
  static Graph from_edges(std::span<const Edge> edges,
                          std::size_t vertex_count = 0);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::uint32_t degree(VertexId v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  bool has_edge(VertexId a, VertexId b) const;

  /// Every edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  const std::optional<BlockLayout>& block_layout() const noexcept {
    return block_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph with_block_layout(Graph graph, BlockLayout layout);
  friend Graph to_block_unipartite(const BipartiteGraph& bipartite);

  void compact_rows();

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::size_t edge_count_ = 0;
  std::optional<BlockLayout> block_;
};

/// Biadjacency structure of a bipartite graph G = (U, V, E).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Edge (u, v) means u in [0, u_count) is linked to v in [0, v_count).
  /// Duplicates collapse; out-of-range indices are rejected.
  static BipartiteGraph from_edges(std::span<const Edge> edges,
                                   std::size_t u_count, std::size_t v_count);

  std::size_t u_count() const noexcept { return row_margin_.size(); }
  std::size_t v_count() const noexcept { return col_margin_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  std::span<const VertexId> v_neighbors(VertexId u) const noexcept {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }

  const std::vector<std::uint32_t>& row_margins() const noexcept {
    return row_margin_;
  }
  const std::vector<std::uint32_t>& col_margins() const noexcept {
    return col_margin_;
  }

  bool has_edge(VertexId u, VertexId v) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) =
      default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::uint32_t> row_margin_;
  std::vector<std::uint32_t> col_margin_;
};

struct DirectedReduction {
  BipartiteGraph graph;
  std::size_t dropped_self_loops = 0;
};

/// Off-diagonal block graph A' = [[0, B], [B^T, 0]]: edge (u_i, v_j) becomes
/// (i, u_count + j). The result carries its BlockLayout.
Graph to_block_unipartite(const BipartiteGraph& bipartite);

/// Out-role / in-role reduction: arc (src, dst) becomes biadjacency entry
/// (src, dst) with U = sources and V = destinations, so u_count = v_count =
/// vertex_count. Arcs with src == dst are dropped and counted.
DirectedReduction directed_to_bipartite(std::span<const Edge> arcs,
                                        std::size_t vertex_count);

}  // namespace nashcd

#endif  // NASHCD_GRAPH_HPP_
