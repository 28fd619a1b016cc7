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

#ifndef NASHCD_MODULARITY_HPP_
#define NASHCD_MODULARITY_HPP_

#include <cstdint>

#include "nashcd/graph.hpp"
#include "nashcd/partition.hpp"

namespace nashcd {

/// Q = sum_c [|e_c|/m - (d_c/2m)^2], evaluated as the exact integer
/// (4m * sum|e_c| - sum d_c^2) divided by 4m^2. Graphs with m = 0 yield 0
/// and emit a warning.
double modularity(const Graph& graph, const Partition& partition);

/// Same value straight from the aggregates kept by `partition`; no warning.
double modularity(const Partition& partition) noexcept;

/// Numerator of Q over the denominator 4m^2.
std::int64_t modularity_numerator(const Partition& partition) noexcept;

/// Q^B computed from the biadjacency structure: |e_c| counts B entries whose
/// two ends share community c and the null term uses row and column margins.
/// `partition` covers the block layout (U ids first, then V ids).
double bipartite_modularity(const BipartiteGraph& bipartite,
                            const Partition& partition);

}  // namespace nashcd

#endif  // NASHCD_MODULARITY_HPP_
