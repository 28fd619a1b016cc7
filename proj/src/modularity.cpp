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

#include "nashcd/modularity.hpp"

#include <string>
#include <vector>

#include "nashcd/error.hpp"

namespace nashcd {

std::int64_t modularity_numerator(const Partition& partition) noexcept {
  const auto m = static_cast<std::int64_t>(partition.graph_edge_count());
  return 4 * m * static_cast<std::int64_t>(partition.internal_edge_total()) -
         static_cast<std::int64_t>(partition.degree_square_total());
}

double modularity(const Partition& partition) noexcept {
  const double m = static_cast<double>(partition.graph_edge_count());
  if (m == 0) return 0.0;
  return static_cast<double>(modularity_numerator(partition)) / (4.0 * m * m);
}

double modularity(const Graph& graph, const Partition& partition) {
  if (partition.vertex_count() != graph.vertex_count() ||
      partition.graph_edge_count() != graph.edge_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition does not belong to this graph");
  }
  if (graph.edge_count() == 0) {
    warn("modularity of a graph without edges is defined as 0");
    return 0.0;
  }
  return modularity(partition);
}

double bipartite_modularity(const BipartiteGraph& bipartite,
                            const Partition& partition) {
  const std::size_t r = bipartite.u_count();
  const std::size_t s = bipartite.v_count();
  if (partition.vertex_count() != r + s) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition covers " + std::to_string(partition.vertex_count()) +
                    " vertices, block layout has " + std::to_string(r + s));
  }
  const double m = static_cast<double>(bipartite.edge_count());
  if (bipartite.edge_count() == 0) {
    warn("modularity of a graph without edges is defined as 0");
    return 0.0;
  }
  const std::size_t k = partition.community_count();
  std::vector<double> edges(k, 0.0);
  std::vector<double> du(k, 0.0);
  std::vector<double> dv(k, 0.0);
  const auto& rows = bipartite.row_margins();
  const auto& cols = bipartite.col_margins();
  for (VertexId i = 0; i < r; ++i) {
    const CommunityId ci = partition.community_of(i);
    du[ci] += rows[i];
    for (VertexId j : bipartite.v_neighbors(i)) {
      if (partition.community_of(static_cast<VertexId>(r + j)) == ci) {
        edges[ci] += 1.0;
      }
    }
  }
  for (VertexId j = 0; j < s; ++j) {
    dv[partition.community_of(static_cast<VertexId>(r + j))] += cols[j];
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double d = (du[c] + dv[c]) / (2.0 * m);
    q += edges[c] / m - d * d;
  }
  return q;
}

}  // namespace nashcd
