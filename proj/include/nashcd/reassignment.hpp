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

#ifndef NASHCD_REASSIGNMENT_HPP_
#define NASHCD_REASSIGNMENT_HPP_

// Reassignment modularity RM_{w: C1 -> C2}, the exact change of Q when w
// leaves its community C1 for C2, and best-response dynamics driven by it.
//
// All values are carried as exact integer numerators over 2m^2:
//   num = 2m (l_{w|C2} - l_{w|C1}) - d_w^2 - d_w (d_C2 - d_C1)
// where d_C1 includes w and d_C2 does not.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashcd/error.hpp"
#include "nashcd/graph.hpp"
#include "nashcd/partition.hpp"

namespace nashcd {

std::int64_t rm_numerator(const Graph& graph, const Partition& partition,
                          VertexId w, CommunityId target);

/// Throws kInvalidArgument when `target` is not a live community.
double rm(const Graph& graph, const Partition& partition, VertexId w,
          CommunityId target);

/// Factor turning a numerator into modularity units: 1 / (2m^2), or 0 when
/// the graph has no edges.
double rm_scale(std::size_t edge_count) noexcept;

/// (community x vertex) table of RM numerators. Rows exist for every
/// community id of the partition it was built from; rows of communities that
/// have become empty are dead and hold no strategy.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t community_count, std::size_t vertex_count,
          std::size_t edge_count);

  std::size_t community_count() const noexcept { return live_.size(); }
  std::size_t vertex_count() const noexcept { return n_; }
  bool is_live(CommunityId c) const noexcept {
    return c < live_.size() && live_[c];
  }
  std::size_t live_count() const noexcept;

  std::int64_t numerator(CommunityId c, VertexId v) const noexcept {
    return values_[static_cast<std::size_t>(c) * n_ + v];
  }
  double at(CommunityId c, VertexId v) const noexcept {
    return static_cast<double>(numerator(c, v)) * scale_;
  }
  double scale() const noexcept { return scale_; }

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  friend RMatrix rm_matrix(const Graph&, const Partition&);
  friend void apply_delta(RMatrix&, const Graph&, const Partition&, VertexId,
                          CommunityId, CommunityId);

  std::int64_t& cell(CommunityId c, VertexId v) noexcept {
    return values_[static_cast<std::size_t>(c) * n_ + v];
  }

  std::size_t n_ = 0;
  double scale_ = 0.0;
  std::vector<char> live_;
  std::vector<std::int64_t> values_;
};

RMatrix rm_matrix(const Graph& graph, const Partition& partition);

/// Sign of the correction to RM_{z: from -> to} after some vertex moved from
/// C1 to C2, in units of dR_z: +2 for C1 -> C2, -2 for C2 -> C1, +1 or -1 when
/// exactly one side is C1 or C2, and 0 otherwise.
int delta_coefficient(CommunityId from, CommunityId to, CommunityId c1,
                      CommunityId c2) noexcept;

/// dR_z numerator over 2m^2 for vertex z after `moved` changed community:
/// 2m A_{moved,z} - d_z d_moved.
std::int64_t delta_r_numerator(const Graph& graph, VertexId moved, VertexId z);
double delta_r(const Graph& graph, VertexId moved, VertexId z);

/// Brings `rmat` from the state before `moved` went from `from` to `to` up to
/// date with `partition`, which must already reflect that move. The mover's
/// own column is recomputed directly; a row whose community became empty is
/// marked dead.
void apply_delta(RMatrix& rmat, const Graph& graph, const Partition& partition,
                 VertexId moved, CommunityId from, CommunityId to);

struct Move {
  VertexId vertex = 0;
  CommunityId from = 0;
  CommunityId to = 0;
  double rm = 0.0;
  double q_after = 0.0;

  friend bool operator==(const Move&, const Move&) = default;
};

struct EquilibriumTrace {
  double seed_q = 0.0;
  double final_q = 0.0;
  std::vector<Move> steps;
};

struct NashConfig {
  enum class Engine { kAutomatic, kDense, kIndexed };

  // RM values at or below this are not an incentive to move.
  double epsilon = 1e-12;
  // 0 selects 10 * n * (live communities of the starting partition).
  std::size_t max_steps = 0;
  Engine engine = Engine::kAutomatic;
  // Recompute everything from scratch every `audit_interval` moves and
  // throw kAuditFailure on any disagreement.
  bool audit = false;
  std::size_t audit_interval = 64;
};

/// Highest-RM move of a single vertex. `target` is kNoCommunity when no
/// other live community exists.
struct BestResponse {
  CommunityId target = kNoCommunity;
  std::int64_t numerator = 0;
};

BestResponse best_response(const Graph& graph, const Partition& partition,
                           VertexId w);

/// If some entry of `rmat` exceeds cfg.epsilon, applies the globally
/// largest one (lowest vertex id, then lowest community id on ties) to
/// `partition` and `rmat` and returns it.
std::optional<Move> best_response_step(const Graph& graph,
                                       Partition& partition, RMatrix& rmat,
                                       const NashConfig& cfg = {});

class StepCapExceeded : public Error {
 public:
  StepCapExceeded(std::size_t cap, EquilibriumTrace trace)
      : Error(ErrorCode::kStepCapExceeded,
              "no equilibrium after " + std::to_string(cap) + " moves"),
        trace_(std::move(trace)) {}

  const EquilibriumTrace& trace() const noexcept { return trace_; }

 private:
  EquilibriumTrace trace_;
};

struct NashResult {
  Partition partition;
  EquilibriumTrace trace;
};

/// Best-response dynamics from `seed` until no vertex has an RM above
/// cfg.epsilon. Community ids of the result match those of `seed`; emptied
/// communities are left dead rather than renumbered.
NashResult to_nash_equilibrium(const Graph& graph, Partition seed,
                               const NashConfig& cfg = {});

bool is_nash_equilibrium(const Graph& graph, const Partition& partition,
                         double epsilon = 1e-12);

struct UnstableVertex {
  VertexId vertex = 0;
  CommunityId target = 0;
  double rm = 0.0;

  friend bool operator==(const UnstableVertex&, const UnstableVertex&) =
      default;
};

/// Vertices whose best RM exceeds `epsilon`, by decreasing RM and then by
/// vertex id.
std::vector<UnstableVertex> unstable_vertices(const RMatrix& rmat,
                                              double epsilon = 1e-12);
std::vector<UnstableVertex> unstable_vertices(const Graph& graph,
                                              const Partition& partition,
                                              double epsilon = 1e-12);

}  // namespace nashcd

#endif  // NASHCD_REASSIGNMENT_HPP_
