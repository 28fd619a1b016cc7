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

#ifndef NASHCD_SYNTHETIC_HPP_
#define NASHCD_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "nashcd/graph.hpp"

namespace nashcd {

/// Author x paper style bipartite graph: U vertices (authors) are spread over
/// `groups` research groups, every V vertex (paper) draws 1 + Geometric(p)
/// authors, mostly from one group with a Zipf bias toward a few prolific
/// members. Author i < v_count is guaranteed to appear on paper i.
struct SyntheticConfig {
  std::size_t u_count = 30000;
  std::size_t v_count = 85000;
  std::size_t groups = 184;
  double extra_author_p = 0.45;
  double zipf_exponent = 1.0;
  double cross_group = 0.05;
  std::uint64_t seed = 1;
};

BipartiteGraph generate_synthetic_bipartite(const SyntheticConfig& cfg = {});

/// Writes the graph as a "%bipartite r s" edge list.
void write_synthetic_bipartite(std::ostream& out,
                               const SyntheticConfig& cfg = {});

}  // namespace nashcd

#endif  // NASHCD_SYNTHETIC_HPP_
