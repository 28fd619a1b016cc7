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

#ifndef NASHCD_PARTITION_HPP_
#define NASHCD_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nashcd/graph.hpp"

namespace nashcd {

/// Total assignment of vertices to communities together with the
/// per-community aggregates |e_c| (internal edges), d_c (degree sum) and
/// size, kept up to date incrementally by move().
///
/// Community ids live in [0, community_count()). A community emptied by
/// move() keeps its id (it is simply no longer live); ids are only
/// renumbered by compacted().
class Partition {
 public:
  Partition() = default;

  /// `community_count` widens the id space beyond max id + 1 so that empty
  /// communities can exist from the start. Ids must be below
  /// max(vertex count, community_count).
  Partition(const Graph& graph, std::vector<CommunityId> assignment,
            std::size_t community_count = 0);

  static Partition singletons(const Graph& graph);
  static Partition single_community(const Graph& graph);

  std::size_t vertex_count() const noexcept { return assignment_.size(); }
  std::size_t community_count() const noexcept { return size_.size(); }
  std::size_t live_count() const noexcept { return live_count_; }
  std::size_t graph_edge_count() const noexcept { return edge_count_; }

  CommunityId community_of(VertexId v) const noexcept { return assignment_[v]; }
  const std::vector<CommunityId>& assignment() const noexcept {
    return assignment_;
  }

  bool is_live(CommunityId c) const noexcept {
    return c < size_.size() && size_[c] > 0;
  }
  std::uint64_t internal_edges(CommunityId c) const { return internal_[c]; }
  std::uint64_t total_degree(CommunityId c) const { return degree_[c]; }
  std::uint32_t size(CommunityId c) const { return size_[c]; }

  /// Live community ids in ascending order.
  std::vector<CommunityId> live_communities() const;

  /// Sum of |e_c| over all communities.
  std::uint64_t internal_edge_total() const noexcept { return edge_total_; }
  /// Sum of d_c^2 over all communities.
  std::uint64_t degree_square_total() const noexcept { return square_total_; }

  /// Moves `v` into `target` (which may be empty) and updates aggregates in
  /// O(degree(v)).
  void move(const Graph& graph, VertexId v, CommunityId target);

  /// Recomputes every aggregate from scratch and throws kAuditFailure on the
  /// first mismatch.
  void audit(const Graph& graph) const;

  /// Same grouping with live communities renumbered 0..live_count()-1 in
  /// ascending order of their current ids.
  Partition compacted() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<CommunityId> assignment_;
  std::vector<std::uint64_t> internal_;
  std::vector<std::uint64_t> degree_;
  std::vector<std::uint32_t> size_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
  std::uint64_t edge_total_ = 0;
  std::uint64_t square_total_ = 0;
};

/// l_{w|c}: number of neighbours of `w` currently assigned to `c`.
std::uint32_t links_to_community(const Graph& graph, const Partition& partition,
                                 VertexId w, CommunityId c);

}  // namespace nashcd

#endif  // NASHCD_PARTITION_HPP_
