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

#ifndef NASHCD_ORACLE_HPP_
#define NASHCD_ORACLE_HPP_

// Slow reference computations used to check the fast paths.

#include <cstddef>

#include "nashcd/graph.hpp"
#include "nashcd/partition.hpp"

namespace nashcd {

/// (1/2m) sum over all ordered pairs (i, j), i == j included, of
/// (A_ij - k_i k_j / 2m) delta(c_i, c_j). O(n^2).
double modularity_pairwise_oracle(const Graph& graph,
                                  const Partition& partition);

inline constexpr std::size_t kBruteForceMaxVertices = 12;

struct BruteForceResult {
  Partition partition;
  double modularity = 0.0;
};

/// Enumerates every set partition as a restricted-growth string and keeps
/// the first one (lexicographically) reaching the maximum Q. Refuses graphs
/// with more than kBruteForceMaxVertices vertices.
BruteForceResult brute_force_best_partition(const Graph& graph);

}  // namespace nashcd

#endif  // NASHCD_ORACLE_HPP_
