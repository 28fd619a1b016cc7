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

#include "nashcd/overlap.hpp"

#include <algorithm>
#include <string>

#include "nashcd/error.hpp"

namespace nashcd {

namespace {

void check_inputs(const Graph& g, const Partition& p, CommunityId c,
                  LegitimacyMode mode) {
  if (p.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition does not belong to this graph");
  }
  if (!p.is_live(c)) {
    throw Error(ErrorCode::kInvalidArgument,
                "community " + std::to_string(c) + " is not live");
  }
  if (mode == LegitimacyMode::kOpposite && !g.block_layout()) {
    throw Error(ErrorCode::kInvalidArgument,
                "opposite-side legitimacy needs a bipartite block graph");
  }
}

struct SideCounts {
  std::size_t u = 0;
  std::size_t v = 0;
};

SideCounts count_sides(const Graph& g, const Partition& p, CommunityId c) {
  SideCounts s;
  const BlockLayout& layout = *g.block_layout();
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (p.community_of(x) != c) continue;
    if (layout.is_u(x)) {
      ++s.u;
    } else {
      ++s.v;
    }
  }
  return s;
}

std::size_t denominator(const Graph& g, const Partition& p, VertexId u,
                        CommunityId c, LegitimacyMode mode,
                        const SideCounts& sides) {
  if (mode == LegitimacyMode::kAll) {
    return p.size(c) - (p.community_of(u) == c ? 1 : 0);
  }
  return g.block_layout()->is_u(u) ? sides.v : sides.u;
}

}  // namespace

LegitimacyMode default_legitimacy_mode(const Graph& graph) noexcept {
  return graph.block_layout() ? LegitimacyMode::kOpposite
                              : LegitimacyMode::kAll;
}

Legitimacy legitimacy(const Graph& graph, const Partition& partition,
                      VertexId u, CommunityId c, LegitimacyMode mode) {
  check_inputs(graph, partition, c, mode);
  if (u >= graph.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(u) + " out of range");
  }
  const SideCounts sides = mode == LegitimacyMode::kOpposite
                               ? count_sides(graph, partition, c)
                               : SideCounts{};
  const std::size_t den = denominator(graph, partition, u, c, mode, sides);
  if (den == 0) return {0.0, true};
  const double num = links_to_community(graph, partition, u, c);
  return {num / static_cast<double>(den), false};
}

std::size_t legitimacy_row(const Graph& graph, const Partition& partition,
                           CommunityId c, LegitimacyMode mode,
                           std::span<double> out) {
  check_inputs(graph, partition, c, mode);
  const std::size_t n = graph.vertex_count();
  if (out.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "row buffer has the wrong size");
  }
  std::fill(out.begin(), out.end(), 0.0);
  SideCounts sides;
  if (mode == LegitimacyMode::kOpposite) sides = count_sides(graph, partition, c);
  // Count links into c by walking the neighbourhoods of its members.
  for (VertexId x = 0; x < n; ++x) {
    if (partition.community_of(x) != c) continue;
    for (VertexId y : graph.neighbors(x)) out[y] += 1.0;
  }
  std::size_t empty = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t den = denominator(graph, partition, v, c, mode, sides);
    if (den == 0) {
      out[v] = 0.0;
      ++empty;
    } else {
      out[v] /= static_cast<double>(den);
    }
  }
  return empty;
}

LegitimacyMatrix legitimacy_matrix(const Graph& graph,
                                   const Partition& partition,
                                   LegitimacyMode mode) {
  LegitimacyMatrix m;
  m.n_ = graph.vertex_count();
  m.communities_ = partition.live_communities();
  m.values_.assign(m.communities_.size() * m.n_, 0.0);
  m.argmax_.assign(m.n_, kNoCommunity);
  std::vector<double> best(m.n_, 0.0);
  for (std::size_t r = 0; r < m.communities_.size(); ++r) {
    std::span<double> row(m.values_.data() + r * m.n_, m.n_);
    m.empty_ += legitimacy_row(graph, partition, m.communities_[r], mode, row);
    for (VertexId v = 0; v < m.n_; ++v) {
      if (row[v] > best[v]) {
        best[v] = row[v];
        m.argmax_[v] = m.communities_[r];
      }
    }
  }
  return m;
}

}  // namespace nashcd
