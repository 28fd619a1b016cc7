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

#ifndef NASHCD_LOUVAIN_HPP_
#define NASHCD_LOUVAIN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nashcd/graph.hpp"
#include "nashcd/partition.hpp"

namespace nashcd {

struct LouvainConfig {
  enum class Scan { kFixed, kSeeded };

  // A sweep whose total gain falls below this ends the local-move phase.
  double min_gain = 1e-10;
  std::size_t max_levels = 32;
  // kFixed scans vertices in ascending id; kSeeded scans a permutation
  // drawn from `seed` at every level.
  Scan scan = Scan::kFixed;
  std::uint64_t seed = 0;
};

/// Integer-weighted graph used at the coarse Louvain levels. Each vertex may
/// carry a self-loop whose weight is the number of fine edges it absorbed;
/// a self-loop adds twice its weight to the vertex degree.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  static WeightedGraph from_graph(const Graph& graph);

  std::size_t vertex_count() const noexcept { return self_.size(); }
  /// Total weight: every edge once plus every self-loop once. Equals m of the
  /// original graph at every level.
  std::uint64_t total_weight() const noexcept { return total_; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const std::uint64_t> weights(VertexId v) const noexcept {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::uint64_t self_loop(VertexId v) const noexcept { return self_[v]; }
  std::uint64_t degree(VertexId v) const noexcept { return degree_[v]; }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  friend struct AggregateBuilder;

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> self_;
  std::vector<std::uint64_t> degree_;
  std::uint64_t total_ = 0;
};

struct AggregateGraph {
  WeightedGraph graph;
  // Fine vertex -> coarse vertex. Coarse ids follow the order in which the
  // communities first appear when scanning fine vertices by id.
  std::vector<CommunityId> mapping;
};

struct LocalMoveResult {
  std::vector<CommunityId> assignment;
  double gained = 0.0;
  std::size_t moves = 0;
  std::size_t sweeps = 0;
};

/// Sweeps vertices, moving each to the neighbouring community with the
/// largest strictly positive gain (lowest id on ties, staying put beats an
/// equal gain elsewhere), until a sweep moves nothing or gains less than
/// cfg.min_gain. Vertices of degree 0 never move.
LocalMoveResult local_move_phase(const WeightedGraph& graph,
                                 std::vector<CommunityId> assignment,
                                 const LouvainConfig& cfg = {});

/// One coarse vertex per community of `assignment`; inter-community edge
/// multiplicities become weights and internal edges become self-loops.
AggregateGraph aggregate(const WeightedGraph& graph,
                         std::span<const CommunityId> assignment);

double weighted_modularity(const WeightedGraph& graph,
                           std::span<const CommunityId> assignment);

/// Multi-level Louvain. Community ids of the result are dense and numbered
/// by first appearance over vertex ids.
Partition louvain(const Graph& graph, const LouvainConfig& cfg = {});

}  // namespace nashcd

#endif  // NASHCD_LOUVAIN_HPP_
