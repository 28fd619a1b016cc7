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

#ifndef NASHCD_OVERLAP_HPP_
#define NASHCD_OVERLAP_HPP_

// Legitimacy L(u in c): edges from u into c divided by the size of c, the
// membership degree that exposes vertices sitting between communities.

#include <cstddef>
#include <span>
#include <vector>

#include "nashcd/graph.hpp"
#include "nashcd/partition.hpp"

namespace nashcd {

enum class LegitimacyMode {
  // Denominator: members of c other than u.
  kAll,
  // Denominator: members of c on the other side of the block layout.
  kOpposite,
};

/// kOpposite for graphs carrying a block layout, kAll otherwise.
LegitimacyMode default_legitimacy_mode(const Graph& graph) noexcept;

struct Legitimacy {
  double value = 0.0;
  // Set when the denominator was 0; value is then 0.
  bool empty_denominator = false;
};

/// `c` must be live. kOpposite requires a block layout.
Legitimacy legitimacy(const Graph& graph, const Partition& partition,
                      VertexId u, CommunityId c, LegitimacyMode mode);

/// Fills `out` (one slot per vertex) with L(v in c) for every v and returns
/// how many vertices hit an empty denominator. O(vol(c) + n).
std::size_t legitimacy_row(const Graph& graph, const Partition& partition,
                           CommunityId c, LegitimacyMode mode,
                           std::span<double> out);

class LegitimacyMatrix {
 public:
  LegitimacyMatrix() = default;

  /// Live community ids, one per row, ascending.
  const std::vector<CommunityId>& communities() const noexcept {
    return communities_;
  }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t row_count() const noexcept { return communities_.size(); }

  double at(std::size_t row, VertexId v) const noexcept {
    return values_[row * n_ + v];
  }
  std::span<const double> row(std::size_t r) const noexcept {
    return {values_.data() + r * n_, n_};
  }

  /// Community with the largest value in column v (lowest id on ties), or
  /// kNoCommunity when the column is all zero.
  CommunityId argmax(VertexId v) const noexcept { return argmax_[v]; }

  std::size_t empty_denominators() const noexcept { return empty_; }

 private:
  friend LegitimacyMatrix legitimacy_matrix(const Graph&, const Partition&,
                                            LegitimacyMode);

  std::size_t n_ = 0;
  std::vector<CommunityId> communities_;
  std::vector<double> values_;
  std::vector<CommunityId> argmax_;
  std::size_t empty_ = 0;
};

LegitimacyMatrix legitimacy_matrix(const Graph& graph,
                                   const Partition& partition,
                                   LegitimacyMode mode);

}  // namespace nashcd

#endif  // NASHCD_OVERLAP_HPP_
