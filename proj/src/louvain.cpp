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

#include "nashcd/louvain.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "nashcd/error.hpp"

namespace nashcd {

WeightedGraph WeightedGraph::from_graph(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  WeightedGraph w;
  w.offsets_.resize(n + 1);
  w.targets_.reserve(2 * graph.edge_count());
  w.weights_.assign(2 * graph.edge_count(), 1);
  w.self_.assign(n, 0);
  w.degree_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    auto nb = graph.neighbors(v);
    w.targets_.insert(w.targets_.end(), nb.begin(), nb.end());
    w.offsets_[v + 1] = w.targets_.size();
    w.degree_[v] = graph.degree(v);
  }
  w.total_ = graph.edge_count();
  return w;
}

namespace {

// Uniform access to unit-weight and weighted adjacency.
struct UnitView {
  const Graph& g;
  std::size_t vertex_count() const { return g.vertex_count(); }
  std::uint64_t total_weight() const { return g.edge_count(); }
  std::span<const VertexId> neighbors(VertexId v) const { return g.neighbors(v); }
  std::uint64_t weight(VertexId, std::size_t) const { return 1; }
  std::uint64_t self_loop(VertexId) const { return 0; }
  std::uint64_t degree(VertexId v) const { return g.degree(v); }
};

struct WeightedView {
  const WeightedGraph& g;
  std::size_t vertex_count() const { return g.vertex_count(); }
  std::uint64_t total_weight() const { return g.total_weight(); }
  std::span<const VertexId> neighbors(VertexId v) const { return g.neighbors(v); }
  std::uint64_t weight(VertexId v, std::size_t e) const { return g.weights(v)[e]; }
  std::uint64_t self_loop(VertexId v) const { return g.self_loop(v); }
  std::uint64_t degree(VertexId v) const { return g.degree(v); }
};

}  // namespace

struct AggregateBuilder {
  template <class View>
  static AggregateGraph build(const View& g, std::span<const CommunityId> assignment) {
    const std::size_t n = g.vertex_count();
    if (assignment.size() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "assignment size does not match the graph");
    }
    AggregateGraph out;
    out.mapping.resize(n);
    std::vector<CommunityId> renumber;
    std::size_t k = 0;
    for (VertexId v = 0; v < n; ++v) {
      const CommunityId c = assignment[v];
      if (c >= renumber.size()) renumber.resize(c + std::size_t{1}, kNoCommunity);
      if (renumber[c] == kNoCommunity) renumber[c] = static_cast<CommunityId>(k++);
      out.mapping[v] = renumber[c];
    }

    // Bucket fine vertices by coarse id.
    std::vector<std::size_t> start(k + 1, 0);
    for (CommunityId c : out.mapping) ++start[c + 1];
    for (std::size_t c = 0; c < k; ++c) start[c + 1] += start[c];
    std::vector<VertexId> members(n);
    {
      std::vector<std::size_t> fill(start.begin(), start.end() - 1);
      for (VertexId v = 0; v < n; ++v) members[fill[out.mapping[v]]++] = v;
    }

    WeightedGraph& cg = out.graph;
    cg.offsets_.assign(k + 1, 0);
    cg.self_.assign(k, 0);
    cg.degree_.assign(k, 0);
    cg.total_ = g.total_weight();
    std::vector<std::uint64_t> scratch(k, 0);
    std::vector<VertexId> touched;
    for (CommunityId c = 0; c < k; ++c) {
      touched.clear();
      for (std::size_t idx = start[c]; idx < start[c + 1]; ++idx) {
        const VertexId i = members[idx];
        cg.self_[c] += g.self_loop(i);
        cg.degree_[c] += g.degree(i);
        auto nb = g.neighbors(i);
        for (std::size_t e = 0; e < nb.size(); ++e) {
          const CommunityId cj = out.mapping[nb[e]];
          const std::uint64_t w = g.weight(i, e);
          if (cj == c) {
            if (i < nb[e]) cg.self_[c] += w;
          } else {
            if (scratch[cj] == 0) touched.push_back(cj);
            scratch[cj] += w;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (VertexId t : touched) {
        cg.targets_.push_back(t);
        cg.weights_.push_back(scratch[t]);
        scratch[t] = 0;
      }
      cg.offsets_[c + 1] = cg.targets_.size();
    }
    return out;
  }
};

AggregateGraph aggregate(const WeightedGraph& graph,
                         std::span<const CommunityId> assignment) {
  return AggregateBuilder::build(WeightedView{graph}, assignment);
}

double weighted_modularity(const WeightedGraph& graph,
                           std::span<const CommunityId> assignment) {
  const std::size_t n = graph.vertex_count();
  if (assignment.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment size does not match the graph");
  }
  const std::uint64_t m = graph.total_weight();
  if (m == 0) return 0.0;
  CommunityId k = 0;
  for (CommunityId c : assignment) k = std::max(k, c + 1);
  std::vector<std::int64_t> in(k, 0);
  std::vector<std::int64_t> tot(k, 0);
  for (VertexId v = 0; v < n; ++v) {
    const CommunityId c = assignment[v];
    tot[c] += static_cast<std::int64_t>(graph.degree(v));
    in[c] += static_cast<std::int64_t>(graph.self_loop(v));
    auto nb = graph.neighbors(v);
    auto wt = graph.weights(v);
    for (std::size_t e = 0; e < nb.size(); ++e) {
      if (v < nb[e] && assignment[nb[e]] == c) {
        in[c] += static_cast<std::int64_t>(wt[e]);
      }
    }
  }
  std::int64_t num = 0;
  const auto mi = static_cast<std::int64_t>(m);
  for (CommunityId c = 0; c < k; ++c) num += 4 * mi * in[c] - tot[c] * tot[c];
  return static_cast<double>(num) / (4.0 * static_cast<double>(m) * m);
}

namespace {

template <class View>
LocalMoveResult sweep_until_stable(const View& graph,
                                   std::vector<CommunityId> comm,
                                   std::span<const VertexId> order,
                                   const LouvainConfig& cfg) {
  const std::size_t n = graph.vertex_count();
  const auto two_m = static_cast<std::int64_t>(2 * graph.total_weight());
  LocalMoveResult out;
  if (two_m == 0) {
    out.assignment = std::move(comm);
    return out;
  }
  std::size_t k = 0;
  for (CommunityId c : comm) k = std::max<std::size_t>(k, c + std::size_t{1});
  k = std::max(k, n);
  std::vector<std::int64_t> tot(k, 0);
  for (VertexId v = 0; v < n; ++v) {
    tot[comm[v]] += static_cast<std::int64_t>(graph.degree(v));
  }
  std::vector<std::int64_t> links(k, 0);
  std::vector<CommunityId> touched;
  // Gains are kept as integers over the common denominator 2m^2.
  const double denom = static_cast<double>(two_m) * static_cast<double>(two_m) / 2.0;
  std::int64_t total_gain = 0;

  while (true) {
    std::size_t moves = 0;
    std::int64_t sweep_gain = 0;
    for (VertexId i : order) {
      const auto ki = static_cast<std::int64_t>(graph.degree(i));
      if (ki == 0) continue;
      const CommunityId own = comm[i];
      tot[own] -= ki;
      touched.clear();
      auto nb = graph.neighbors(i);
      for (std::size_t e = 0; e < nb.size(); ++e) {
        const CommunityId c = comm[nb[e]];
        if (links[c] == 0) touched.push_back(c);
        links[c] += static_cast<std::int64_t>(graph.weight(i, e));
      }
      std::sort(touched.begin(), touched.end());
      auto value = [&](CommunityId c) { return two_m * links[c] - tot[c] * ki; };
      const std::int64_t own_value = value(own);
      CommunityId best = own;
      std::int64_t best_value = own_value;
      for (CommunityId c : touched) {
        const std::int64_t v = value(c);
        if (v > best_value) {
          best = c;
          best_value = v;
        }
      }
      for (CommunityId c : touched) links[c] = 0;
      sweep_gain += best_value - own_value;
      tot[best] += ki;
      if (best != own) {
        comm[i] = best;
        ++moves;
      }
    }
    ++out.sweeps;
    out.moves += moves;
    total_gain += sweep_gain;
    if (moves == 0 || static_cast<double>(sweep_gain) / denom < cfg.min_gain) {
      break;
    }
  }
  out.assignment = std::move(comm);
  out.gained = static_cast<double>(total_gain) / denom;
  return out;
}

std::vector<VertexId> scan_order(std::size_t n, const LouvainConfig& cfg,
                                 std::mt19937_64& rng) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  if (cfg.scan == LouvainConfig::Scan::kSeeded) {
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

}  // namespace

LocalMoveResult local_move_phase(const WeightedGraph& graph,
                                 std::vector<CommunityId> assignment,
                                 const LouvainConfig& cfg) {
  if (assignment.size() != graph.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment size does not match the graph");
  }
  std::mt19937_64 rng(cfg.seed);
  const auto order = scan_order(graph.vertex_count(), cfg, rng);
  return sweep_until_stable(WeightedView{graph}, std::move(assignment), order, cfg);
}

Partition louvain(const Graph& graph, const LouvainConfig& cfg) {
  const std::size_t n = graph.vertex_count();
  std::vector<CommunityId> mapping(n);
  std::iota(mapping.begin(), mapping.end(), CommunityId{0});
  if (graph.edge_count() == 0) {
    warn("graph has no edges; every vertex stays a singleton");
    return Partition(graph, std::move(mapping));
  }
  std::mt19937_64 rng(cfg.seed);
  WeightedGraph level;
  for (std::size_t depth = 0; depth < cfg.max_levels; ++depth) {
    const bool fine = depth == 0;
    const std::size_t ln = fine ? n : level.vertex_count();
    std::vector<CommunityId> start(ln);
    std::iota(start.begin(), start.end(), CommunityId{0});
    const auto order = scan_order(ln, cfg, rng);
    LocalMoveResult phase =
        fine ? sweep_until_stable(UnitView{graph}, std::move(start), order, cfg)
             : sweep_until_stable(WeightedView{level}, std::move(start), order, cfg);
    if (phase.moves == 0) break;
    AggregateGraph agg =
        fine ? AggregateBuilder::build(UnitView{graph}, phase.assignment)
             : AggregateBuilder::build(WeightedView{level}, phase.assignment);
    for (CommunityId& c : mapping) c = agg.mapping[c];
    if (agg.graph.vertex_count() == ln) break;
    level = std::move(agg.graph);
  }
  return Partition(graph, std::move(mapping));
}

}  // namespace nashcd
