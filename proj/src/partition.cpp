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

#include "nashcd/partition.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "nashcd/error.hpp"

namespace nashcd {

Partition::Partition(const Graph& graph, std::vector<CommunityId> assignment,
                     std::size_t community_count)
    : assignment_(std::move(assignment)), edge_count_(graph.edge_count()) {
  const std::size_t n = graph.vertex_count();
  if (assignment_.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment has " + std::to_string(assignment_.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  const std::size_t id_limit = std::max(n, community_count);
  std::size_t k = community_count;
  for (VertexId v = 0; v < n; ++v) {
    const CommunityId c = assignment_[v];
    if (c >= id_limit) {
      throw Error(ErrorCode::kInvalidArgument,
                  "community id " + std::to_string(c) + " of vertex " +
                      std::to_string(v) + " exceeds " +
                      std::to_string(id_limit) + " - 1");
    }
    k = std::max<std::size_t>(k, c + std::size_t{1});
  }
  internal_.assign(k, 0);
  degree_.assign(k, 0);
  size_.assign(k, 0);
  for (VertexId v = 0; v < n; ++v) {
    const CommunityId c = assignment_[v];
    if (size_[c]++ == 0) ++live_count_;
    degree_[c] += graph.degree(v);
    for (VertexId x : graph.neighbors(v)) {
      if (x > v && assignment_[x] == c) ++internal_[c];
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    edge_total_ += internal_[c];
    square_total_ += degree_[c] * degree_[c];
  }
}

Partition Partition::singletons(const Graph& graph) {
  std::vector<CommunityId> a(graph.vertex_count());
  for (VertexId v = 0; v < a.size(); ++v) a[v] = v;
  return Partition(graph, std::move(a));
}

Partition Partition::single_community(const Graph& graph) {
  return Partition(graph, std::vector<CommunityId>(graph.vertex_count(), 0));
}

std::vector<CommunityId> Partition::live_communities() const {
  std::vector<CommunityId> out;
  out.reserve(live_count_);
  for (CommunityId c = 0; c < size_.size(); ++c) {
    if (size_[c] > 0) out.push_back(c);
  }
  return out;
}

void Partition::move(const Graph& graph, VertexId v, CommunityId target) {
  if (v >= assignment_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " out of range");
  }
  if (target >= size_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "community " + std::to_string(target) + " out of range");
  }
  const CommunityId from = assignment_[v];
  if (from == target) return;
  std::uint64_t l_from = 0;
  std::uint64_t l_to = 0;
  for (VertexId x : graph.neighbors(v)) {
    const CommunityId cx = assignment_[x];
    if (cx == from) {
      ++l_from;
    } else if (cx == target) {
      ++l_to;
    }
  }
  const std::uint64_t k = graph.degree(v);
  square_total_ -= degree_[from] * degree_[from] + degree_[target] * degree_[target];
  internal_[from] -= l_from;
  internal_[target] += l_to;
  edge_total_ = edge_total_ - l_from + l_to;
  degree_[from] -= k;
  degree_[target] += k;
  square_total_ += degree_[from] * degree_[from] + degree_[target] * degree_[target];
  if (--size_[from] == 0) --live_count_;
  if (size_[target]++ == 0) ++live_count_;
  assignment_[v] = target;
}

void Partition::audit(const Graph& graph) const {
  const Partition fresh(graph, assignment_, size_.size());
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kAuditFailure, "partition audit failed: " + what);
  };
  if (fresh.edge_count_ != edge_count_) fail("edge count");
  for (CommunityId c = 0; c < size_.size(); ++c) {
    if (fresh.internal_[c] != internal_[c]) {
      fail("|e_c| of community " + std::to_string(c));
    }
    if (fresh.degree_[c] != degree_[c]) {
      fail("d_c of community " + std::to_string(c));
    }
    if (fresh.size_[c] != size_[c]) {
      fail("size of community " + std::to_string(c));
    }
  }
  if (fresh.live_count_ != live_count_) fail("live count");
  if (fresh.edge_total_ != edge_total_) fail("internal edge total");
  if (fresh.square_total_ != square_total_) fail("degree square total");
}

Partition Partition::compacted() const {
  std::vector<CommunityId> remap(size_.size(), kNoCommunity);
  CommunityId next = 0;
  for (CommunityId c = 0; c < size_.size(); ++c) {
    if (size_[c] > 0) remap[c] = next++;
  }
  Partition out;
  out.assignment_.resize(assignment_.size());
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    out.assignment_[v] = remap[assignment_[v]];
  }
  out.internal_.reserve(next);
  out.degree_.reserve(next);
  out.size_.reserve(next);
  for (CommunityId c = 0; c < size_.size(); ++c) {
    if (size_[c] == 0) continue;
    out.internal_.push_back(internal_[c]);
    out.degree_.push_back(degree_[c]);
    out.size_.push_back(size_[c]);
  }
  out.live_count_ = next;
  out.edge_count_ = edge_count_;
  out.edge_total_ = edge_total_;
  out.square_total_ = square_total_;
  return out;
}

std::uint32_t links_to_community(const Graph& graph, const Partition& partition,
                                 VertexId w, CommunityId c) {
  std::uint32_t l = 0;
  for (VertexId x : graph.neighbors(w)) {
    if (partition.community_of(x) == c) ++l;
  }
  return l;
}

}  // namespace nashcd
