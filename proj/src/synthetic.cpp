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

#include "nashcd/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "nashcd/error.hpp"

namespace nashcd {

BipartiteGraph generate_synthetic_bipartite(const SyntheticConfig& cfg) {
  if (cfg.u_count == 0 || cfg.v_count == 0 || cfg.groups == 0 ||
      cfg.groups > cfg.u_count) {
    throw Error(ErrorCode::kInvalidArgument,
                "synthetic graph needs 1 <= groups <= u_count and v_count > 0");
  }
  if (!(cfg.extra_author_p > 0.0 && cfg.extra_author_p <= 1.0) ||
      !(cfg.cross_group >= 0.0 && cfg.cross_group <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "synthetic probabilities must lie in (0, 1]");
  }
  std::mt19937_64 rng(cfg.seed);

  std::vector<VertexId> authors(cfg.u_count);
  std::iota(authors.begin(), authors.end(), VertexId{0});
  std::shuffle(authors.begin(), authors.end(), rng);
  std::vector<std::vector<VertexId>> members(cfg.groups);
  std::vector<std::size_t> group_of(cfg.u_count);
  for (std::size_t i = 0; i < cfg.u_count; ++i) {
    members[i % cfg.groups].push_back(authors[i]);
    group_of[authors[i]] = i % cfg.groups;
  }
  std::vector<std::vector<double>> cdf(cfg.groups);
  for (std::size_t g = 0; g < cfg.groups; ++g) {
    double acc = 0.0;
    for (std::size_t r = 0; r < members[g].size(); ++r) {
      acc += 1.0 / std::pow(static_cast<double>(r + 1), cfg.zipf_exponent);
      cdf[g].push_back(acc);
    }
  }

  std::uniform_int_distribution<std::size_t> pick_group(0, cfg.groups - 1);
  std::uniform_int_distribution<VertexId> pick_any(
      0, static_cast<VertexId>(cfg.u_count - 1));
  std::geometric_distribution<int> extra(cfg.extra_author_p);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Edge> edges;
  edges.reserve(cfg.v_count * 2);
  std::vector<VertexId> on_paper;
  for (std::size_t p = 0; p < cfg.v_count; ++p) {
    on_paper.clear();
    std::size_t g;
    if (p < cfg.u_count) {
      on_paper.push_back(static_cast<VertexId>(p));
      g = group_of[p];
    } else {
      g = pick_group(rng);
    }
    const std::size_t want = 1 + static_cast<std::size_t>(extra(rng));
    for (std::size_t tries = 0; on_paper.size() < want && tries < 8 * want;
         ++tries) {
      VertexId a;
      if (unit(rng) < cfg.cross_group) {
        a = pick_any(rng);
      } else {
        const double x = unit(rng) * cdf[g].back();
        const auto it = std::upper_bound(cdf[g].begin(), cdf[g].end(), x);
        const std::size_t r = std::min<std::size_t>(
            static_cast<std::size_t>(it - cdf[g].begin()), members[g].size() - 1);
        a = members[g][r];
      }
      if (std::find(on_paper.begin(), on_paper.end(), a) == on_paper.end()) {
        on_paper.push_back(a);
      }
    }
    for (VertexId a : on_paper) edges.push_back({a, static_cast<VertexId>(p)});
  }
  return BipartiteGraph::from_edges(edges, cfg.u_count, cfg.v_count);
}

void write_synthetic_bipartite(std::ostream& out, const SyntheticConfig& cfg) {
  const BipartiteGraph g = generate_synthetic_bipartite(cfg);
  out << "# synthetic author x paper graph, seed " << cfg.seed << '\n';
  out << "%bipartite " << g.u_count() << ' ' << g.v_count() << '\n';
  for (VertexId u = 0; u < g.u_count(); ++u) {
    for (VertexId v : g.v_neighbors(u)) out << u << ' ' << v << '\n';
  }
}

}  // namespace nashcd
