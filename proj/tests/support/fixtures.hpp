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

#ifndef NASHCD_TESTS_FIXTURES_HPP_
#define NASHCD_TESTS_FIXTURES_HPP_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "nashcd/graph.hpp"
#include "nashcd/partition.hpp"

namespace nashcd::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(NASHCD_DATA_DIR) / name;
}

inline Graph triangle() { return Graph::from_edges({{{0, 1}, {1, 2}, {2, 0}}}); }

// {a,b,c} triangle plus a separate d-e edge; a..e = 0..4.
inline Graph triangle_plus_edge() {
  return Graph::from_edges({{{0, 1}, {1, 2}, {2, 0}, {3, 4}}});
}

inline Partition triangle_plus_edge_split(const Graph& g) {
  return Partition(g, {0, 0, 0, 1, 1});
}

// Triangles {0,1,2} and {3,4,5} joined by 2-3.
inline Graph two_triangles() {
  return Graph::from_edges(
      {{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}}});
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(edges, n);
}

inline BipartiteGraph random_bipartite(std::mt19937_64& rng, std::size_t r,
                                       std::size_t s, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < r; ++i) {
    for (VertexId j = 0; j < s; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return BipartiteGraph::from_edges(edges, r, s);
}

// Ids drawn from [0, k); some may stay empty.
inline Partition random_partition(std::mt19937_64& rng, const Graph& g,
                                  std::size_t k) {
  std::uniform_int_distribution<CommunityId> pick(
      0, static_cast<CommunityId>(k - 1));
  std::vector<CommunityId> a(g.vertex_count());
  for (auto& c : a) c = pick(rng);
  return Partition(g, std::move(a), k);
}

}  // namespace nashcd::testing

#endif  // NASHCD_TESTS_FIXTURES_HPP_
