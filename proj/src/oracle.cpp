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

#include "nashcd/oracle.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "nashcd/error.hpp"

namespace nashcd {

double modularity_pairwise_oracle(const Graph& graph,
                                  const Partition& partition) {
  const std::size_t n = graph.vertex_count();
  if (partition.vertex_count() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition does not belong to this graph");
  }
  if (graph.edge_count() == 0) {
    warn("modularity of a graph without edges is defined as 0");
    return 0.0;
  }
  const double two_m = 2.0 * static_cast<double>(graph.edge_count());
  double sum = 0.0;
  for (VertexId i = 0; i < n; ++i) {
    const double ki = graph.degree(i);
    for (VertexId j = 0; j < n; ++j) {
      if (partition.community_of(i) != partition.community_of(j)) continue;
      const double a = graph.has_edge(i, j) ? 1.0 : 0.0;
      sum += a - ki * graph.degree(j) / two_m;
    }
  }
  return sum / two_m;
}

namespace {

struct Enumerator {
  const Graph& graph;
  std::int64_t m;
  std::vector<CommunityId> current;
  std::vector<std::int64_t> internal;
  std::vector<std::int64_t> degree;
  std::vector<CommunityId> best;
  std::int64_t best_numerator = std::numeric_limits<std::int64_t>::min();

  void recurse(VertexId v, CommunityId used, std::int64_t e_total,
               std::int64_t sq_total) {
    if (v == current.size()) {
      const std::int64_t num = 4 * m * e_total - sq_total;
      if (num > best_numerator) {
        best_numerator = num;
        best = current;
      }
      return;
    }
    const std::int64_t k = graph.degree(v);
    for (CommunityId c = 0; c <= used && c < current.size(); ++c) {
      std::int64_t l = 0;
      for (VertexId x : graph.neighbors(v)) {
        if (x < v && current[x] == c) ++l;
      }
      current[v] = c;
      const std::int64_t d_old = degree[c];
      internal[c] += l;
      degree[c] += k;
      recurse(v + 1, c == used ? used + 1 : used, e_total + l,
              sq_total - d_old * d_old + degree[c] * degree[c]);
      internal[c] -= l;
      degree[c] = d_old;
    }
  }
};

}  // namespace

BruteForceResult brute_force_best_partition(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n > kBruteForceMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "brute-force enumeration refuses " + std::to_string(n) +
                    " vertices (limit " +
                    std::to_string(kBruteForceMaxVertices) + ")");
  }
  Enumerator e{graph,
               static_cast<std::int64_t>(graph.edge_count()),
               std::vector<CommunityId>(n, 0),
               std::vector<std::int64_t>(n, 0),
               std::vector<std::int64_t>(n, 0),
               {},
               std::numeric_limits<std::int64_t>::min()};
  e.recurse(0, 0, 0, 0);
  BruteForceResult out{Partition(graph, e.best), 0.0};
  if (e.m > 0) {
    out.modularity = static_cast<double>(e.best_numerator) /
                     (4.0 * static_cast<double>(e.m * e.m));
  }
  return out;
}

}  // namespace nashcd
