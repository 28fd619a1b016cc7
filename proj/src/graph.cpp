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

#include "nashcd/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nashcd/error.hpp"

namespace nashcd {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

void check_edge_budget(std::size_t edges) {
  if (edges > kMaxEdges) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph has " + std::to_string(edges) +
                    " edges; at most " + std::to_string(kMaxEdges) +
                    " are supported");
  }
}

}  // namespace

Graph Graph::from_edges(std::span<const Edge> edges, std::size_t vertex_count) {
  std::size_t n = vertex_count;
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop " + pair_text(e) + " is not allowed");
    }
    if (e.u == std::numeric_limits<VertexId>::max() ||
        e.v == std::numeric_limits<VertexId>::max()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex id out of range in " + pair_text(e));
    }
    n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * edges.size());
  {
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
      g.targets_[fill[e.u]++] = e.v;
      g.targets_[fill[e.v]++] = e.u;
    }
  }
  g.compact_rows();
  check_edge_budget(g.edge_count_);
  return g;
}

void Graph::compact_rows() {
  const std::size_t n = vertex_count();
  std::size_t out = 0;
  std::size_t begin = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t end = offsets_[v + 1];
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(begin);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(end);
    std::sort(first, last);
    last = std::unique(first, last);
    const auto kept = static_cast<std::size_t>(last - first);
    std::copy(first, last, targets_.begin() + static_cast<std::ptrdiff_t>(out));
    begin = end;
    offsets_[v] = out;
    out += kept;
  }
  offsets_[n] = out;
  targets_.resize(out);
  targets_.shrink_to_fit();
  edge_count_ = out / 2;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph with_block_layout(Graph graph, BlockLayout layout) {
  graph.block_ = layout;
  return graph;
}

BipartiteGraph BipartiteGraph::from_edges(std::span<const Edge> edges,
                                          std::size_t u_count,
                                          std::size_t v_count) {
  BipartiteGraph bg;
  bg.offsets_.assign(u_count + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= u_count || e.v >= v_count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bipartite edge " + pair_text(e) + " outside " +
                      std::to_string(u_count) + " x " +
                      std::to_string(v_count));
    }
    ++bg.offsets_[e.u + 1];
  }
  for (std::size_t i = 0; i < u_count; ++i) bg.offsets_[i + 1] += bg.offsets_[i];
  bg.targets_.resize(edges.size());
  {
    std::vector<std::size_t> fill(bg.offsets_.begin(), bg.offsets_.end() - 1);
    for (const Edge& e : edges) bg.targets_[fill[e.u]++] = e.v;
  }

  std::size_t out = 0;
  std::size_t begin = 0;
  for (std::size_t u = 0; u < u_count; ++u) {
    const std::size_t end = bg.offsets_[u + 1];
    auto first = bg.targets_.begin() + static_cast<std::ptrdiff_t>(begin);
    auto last = bg.targets_.begin() + static_cast<std::ptrdiff_t>(end);
    std::sort(first, last);
    last = std::unique(first, last);
    const auto kept = static_cast<std::size_t>(last - first);
    std::copy(first, last, bg.targets_.begin() + static_cast<std::ptrdiff_t>(out));
    begin = end;
    bg.offsets_[u] = out;
    out += kept;
  }
  bg.offsets_[u_count] = out;
  bg.targets_.resize(out);
  bg.targets_.shrink_to_fit();
  check_edge_budget(out);

  bg.row_margin_.resize(u_count);
  bg.col_margin_.assign(v_count, 0);
  for (std::size_t u = 0; u < u_count; ++u) {
    bg.row_margin_[u] = static_cast<std::uint32_t>(bg.offsets_[u + 1] - bg.offsets_[u]);
  }
  for (VertexId v : bg.targets_) ++bg.col_margin_[v];
  return bg;
}

bool BipartiteGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= u_count()) return false;
  auto nb = v_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph to_block_unipartite(const BipartiteGraph& bipartite) {
  const std::size_t r = bipartite.u_count();
  const std::size_t s = bipartite.v_count();
  if (r + s >= std::numeric_limits<VertexId>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "bipartite graph too large");
  }
  Graph g;
  g.offsets_.assign(r + s + 1, 0);
  for (std::size_t u = 0; u < r; ++u) {
    g.offsets_[u + 1] = g.offsets_[u] + bipartite.row_margins()[u];
  }
  for (std::size_t v = 0; v < s; ++v) {
    g.offsets_[r + v + 1] =
        g.offsets_[r + v] + bipartite.col_margins()[v];
  }
  g.targets_.resize(2 * bipartite.edge_count());
  std::vector<std::size_t> fill(g.offsets_.begin() + static_cast<std::ptrdiff_t>(r),
                                g.offsets_.end() - 1);
  for (VertexId u = 0; u < r; ++u) {
    std::size_t at = g.offsets_[u];
    for (VertexId v : bipartite.v_neighbors(u)) {
      g.targets_[at++] = static_cast<VertexId>(r + v);
      g.targets_[fill[v]++] = u;
    }
  }
  g.edge_count_ = bipartite.edge_count();
  g.block_ = BlockLayout{r, s};
  return g;
}

DirectedReduction directed_to_bipartite(std::span<const Edge> arcs,
                                        std::size_t vertex_count) {
  std::vector<Edge> kept;
  kept.reserve(arcs.size());
  std::size_t dropped = 0;
  for (const Edge& a : arcs) {
    if (a.u >= vertex_count || a.v >= vertex_count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "arc " + pair_text(a) + " outside [0, " +
                      std::to_string(vertex_count) + ")");
    }
    if (a.u == a.v) {
      ++dropped;
      continue;
    }
    kept.push_back(a);
  }
  if (dropped > 0) {
    warn("dropped " + std::to_string(dropped) + " directed self-loop(s)");
  }
  return {BipartiteGraph::from_edges(kept, vertex_count, vertex_count),
          dropped};
}

}  // namespace nashcd
