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

#include "nashcd/reassignment.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "nashcd/modularity.hpp"

namespace nashcd {

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

void check_vertex(const Partition& p, VertexId w) {
  if (w >= p.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(w) + " out of range");
  }
}

void check_live(const Partition& p, CommunityId c) {
  if (!p.is_live(c)) {
    throw Error(ErrorCode::kInvalidArgument,
                "community " + std::to_string(c) + " is not live");
  }
}

i64 two_m_of(const Graph& g) { return 2 * static_cast<i64>(g.edge_count()); }

// Per-vertex link counts to neighbouring communities, reset after each use.
class LinkCounter {
 public:
  explicit LinkCounter(std::size_t communities) : links_(communities, 0) {}

  void count(const Graph& g, const Partition& p, VertexId w) {
    for (CommunityId c : touched_) links_[c] = 0;
    touched_.clear();
    for (VertexId x : g.neighbors(w)) {
      const CommunityId c = p.community_of(x);
      if (links_[c]++ == 0) touched_.push_back(c);
    }
  }
  i64 links(CommunityId c) const { return links_[c]; }
  const std::vector<CommunityId>& touched() const { return touched_; }

 private:
  std::vector<std::uint32_t> links_;
  std::vector<CommunityId> touched_;
};

bool better(i64 value, CommunityId c, i64 best_value, CommunityId best) {
  return best == kNoCommunity || value > best_value ||
         (value == best_value && c < best);
}

// `by_degree` iterates live communities by ascending (d_c, id). `counter`
// must hold the link counts of w.
template <class Ordered>
BestResponse evaluate(const Graph& g, const Partition& p, VertexId w,
                      const Ordered& by_degree, const LinkCounter& counter) {
  const i64 two_m = two_m_of(g);
  const CommunityId own = p.community_of(w);
  const i64 d = g.degree(w);
  BestResponse best;
  if (d == 0) {
    // Every target scores 0; report the lowest live id.
    for (const auto& [dc, c] : by_degree) {
      if (c != own && c < best.target) best.target = c;
    }
    return best;
  }
  const i64 base = -two_m * counter.links(own) - d * d +
                   d * static_cast<i64>(p.total_degree(own));
  for (CommunityId c : counter.touched()) {
    if (c == own) continue;
    const i64 v = base + two_m * counter.links(c) -
                  d * static_cast<i64>(p.total_degree(c));
    if (better(v, c, best.numerator, best.target)) {
      best = {c, v};
    }
  }
  // Among communities w has no edge into, the smallest d_c scores highest.
  for (const auto& [dc, c] : by_degree) {
    if (c == own || counter.links(c) > 0) continue;
    const i64 v = base - d * static_cast<i64>(dc);
    if (better(v, c, best.numerator, best.target)) best = {c, v};
    break;
  }
  return best;
}

std::vector<std::pair<std::uint64_t, CommunityId>> sorted_live(
    const Partition& p) {
  std::vector<std::pair<std::uint64_t, CommunityId>> out;
  out.reserve(p.live_count());
  for (CommunityId c : p.live_communities()) out.emplace_back(p.total_degree(c), c);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t default_cap(const Partition& p) {
  return std::max<std::size_t>(1, 10 * p.vertex_count() * p.live_count());
}

bool is_positive(i64 num, double scale, double epsilon) {
  return static_cast<double>(num) * scale > epsilon;
}

}  // namespace

double rm_scale(std::size_t edge_count) noexcept {
  if (edge_count == 0) return 0.0;
  const double m = static_cast<double>(edge_count);
  return 1.0 / (2.0 * m * m);
}

std::int64_t rm_numerator(const Graph& graph, const Partition& partition,
                          VertexId w, CommunityId target) {
  check_vertex(partition, w);
  check_live(partition, target);
  const CommunityId own = partition.community_of(w);
  if (own == target) return 0;
  i64 l_own = 0;
  i64 l_target = 0;
  for (VertexId x : graph.neighbors(w)) {
    const CommunityId c = partition.community_of(x);
    if (c == own) {
      ++l_own;
    } else if (c == target) {
      ++l_target;
    }
  }
  const i64 d = graph.degree(w);
  return two_m_of(graph) * (l_target - l_own) - d * d -
         d * (static_cast<i64>(partition.total_degree(target)) -
              static_cast<i64>(partition.total_degree(own)));
}

double rm(const Graph& graph, const Partition& partition, VertexId w,
          CommunityId target) {
  return static_cast<double>(rm_numerator(graph, partition, w, target)) *
         rm_scale(graph.edge_count());
}

RMatrix::RMatrix(std::size_t community_count, std::size_t vertex_count,
                 std::size_t edge_count)
    : n_(vertex_count),
      scale_(rm_scale(edge_count)),
      live_(community_count, 0),
      values_(community_count * vertex_count, 0) {}

std::size_t RMatrix::live_count() const noexcept {
  return static_cast<std::size_t>(std::count(live_.begin(), live_.end(), 1));
}

RMatrix rm_matrix(const Graph& graph, const Partition& partition) {
  const std::size_t n = graph.vertex_count();
  if (partition.vertex_count() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition does not belong to this graph");
  }
  const std::size_t k = partition.community_count();
  RMatrix out(k, n, graph.edge_count());
  const auto live = partition.live_communities();
  for (CommunityId c : live) out.live_[c] = 1;
  const i64 two_m = two_m_of(graph);
  LinkCounter counter(k);
  for (VertexId w = 0; w < n; ++w) {
    counter.count(graph, partition, w);
    const CommunityId own = partition.community_of(w);
    const i64 d = graph.degree(w);
    const i64 base = -two_m * counter.links(own) - d * d +
                     d * static_cast<i64>(partition.total_degree(own));
    for (CommunityId c : live) {
      if (c == own) continue;
      out.cell(c, w) = base + two_m * counter.links(c) -
                       d * static_cast<i64>(partition.total_degree(c));
    }
  }
  return out;
}

int delta_coefficient(CommunityId from, CommunityId to, CommunityId c1,
                      CommunityId c2) noexcept {
  auto side = [&](CommunityId c) { return c == c2 ? 1 : (c == c1 ? -1 : 0); };
  if (from == to) return 0;
  return side(to) - side(from);
}

std::int64_t delta_r_numerator(const Graph& graph, VertexId moved, VertexId z) {
  const i64 a = graph.has_edge(moved, z) ? 1 : 0;
  return two_m_of(graph) * a -
         static_cast<i64>(graph.degree(z)) * static_cast<i64>(graph.degree(moved));
}

double delta_r(const Graph& graph, VertexId moved, VertexId z) {
  return static_cast<double>(delta_r_numerator(graph, moved, z)) *
         rm_scale(graph.edge_count());
}

void apply_delta(RMatrix& rmat, const Graph& graph, const Partition& partition,
                 VertexId moved, CommunityId from, CommunityId to) {
  const std::size_t n = graph.vertex_count();
  if (rmat.vertex_count() != n || partition.vertex_count() != n ||
      rmat.community_count() != partition.community_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "RM matrix does not match the partition");
  }
  check_vertex(partition, moved);
  if (partition.community_of(moved) != to || !rmat.is_live(from) ||
      !rmat.is_live(to)) {
    throw Error(ErrorCode::kInvalidArgument,
                "apply_delta called with an inconsistent move");
  }
  if (from == to) return;
  const i64 two_m = two_m_of(graph);
  const i64 dw = graph.degree(moved);
  std::vector<char> adjacent(n, 0);
  for (VertexId x : graph.neighbors(moved)) adjacent[x] = 1;

  const bool from_dies = partition.size(from) == 0;
  if (from_dies) rmat.live_[from] = 0;
  std::vector<CommunityId> live;
  for (CommunityId c = 0; c < rmat.community_count(); ++c) {
    if (rmat.live_[c]) live.push_back(c);
  }

  for (VertexId z = 0; z < n; ++z) {
    if (z == moved) continue;
    const i64 delta = two_m * adjacent[z] - static_cast<i64>(graph.degree(z)) * dw;
    const CommunityId a = partition.community_of(z);
    if (a == from || a == to) {
      for (CommunityId b : live) {
        rmat.cell(b, z) += delta_coefficient(a, b, from, to) * delta;
      }
    } else {
      if (!from_dies) rmat.cell(from, z) -= delta;
      rmat.cell(to, z) += delta;
    }
  }
  if (from_dies) {
    for (VertexId z = 0; z < n; ++z) rmat.cell(from, z) = 0;
  }

  LinkCounter counter(partition.community_count());
  counter.count(graph, partition, moved);
  const i64 base = -two_m * counter.links(to) - dw * dw +
                   dw * static_cast<i64>(partition.total_degree(to));
  for (CommunityId c : live) {
    rmat.cell(c, moved) =
        c == to ? 0
                : base + two_m * counter.links(c) -
                      dw * static_cast<i64>(partition.total_degree(c));
  }
}

BestResponse best_response(const Graph& graph, const Partition& partition,
                           VertexId w) {
  check_vertex(partition, w);
  LinkCounter counter(partition.community_count());
  counter.count(graph, partition, w);
  return evaluate(graph, partition, w, sorted_live(partition), counter);
}

namespace {

struct Candidate {
  i64 numerator = 0;
  VertexId vertex = 0;
  CommunityId target = kNoCommunity;
};

Candidate dense_best(const RMatrix& rmat) {
  Candidate best;
  const std::size_t n = rmat.vertex_count();
  for (CommunityId c = 0; c < rmat.community_count(); ++c) {
    if (!rmat.is_live(c)) continue;
    for (VertexId v = 0; v < n; ++v) {
      const i64 x = rmat.numerator(c, v);
      if (best.target == kNoCommunity || x > best.numerator ||
          (x == best.numerator && v < best.vertex)) {
        best = {x, v, c};
      }
    }
  }
  return best;
}

}  // namespace

std::optional<Move> best_response_step(const Graph& graph,
                                       Partition& partition, RMatrix& rmat,
                                       const NashConfig& cfg) {
  const Candidate best = dense_best(rmat);
  if (best.target == kNoCommunity ||
      !is_positive(best.numerator, rmat.scale(), cfg.epsilon)) {
    return std::nullopt;
  }
  const CommunityId from = partition.community_of(best.vertex);
  partition.move(graph, best.vertex, best.target);
  apply_delta(rmat, graph, partition, best.vertex, from, best.target);
  return Move{best.vertex, from, best.target,
              static_cast<double>(best.numerator) * rmat.scale(),
              modularity(partition)};
}

namespace {

void audit_dense(const Graph& g, const Partition& p, const RMatrix& rmat) {
  p.audit(g);
  if (!(rm_matrix(g, p) == rmat)) {
    throw Error(ErrorCode::kAuditFailure,
                "incremental RM matrix disagrees with recomputation");
  }
}

void check_cap(const EquilibriumTrace& trace, std::size_t cap) {
  if (trace.steps.size() >= cap) throw StepCapExceeded(cap, trace);
}

NashResult run_dense(const Graph& g, Partition p, const NashConfig& cfg,
                     std::size_t cap) {
  NashResult out;
  out.trace.seed_q = modularity(p);
  RMatrix rmat = rm_matrix(g, p);
  while (true) {
    const Candidate best = dense_best(rmat);
    if (best.target == kNoCommunity ||
        !is_positive(best.numerator, rmat.scale(), cfg.epsilon)) {
      break;
    }
    check_cap(out.trace, cap);
    auto move = best_response_step(g, p, rmat, cfg);
    out.trace.steps.push_back(*move);
    if (cfg.audit && cfg.audit_interval > 0 &&
        out.trace.steps.size() % cfg.audit_interval == 0) {
      audit_dense(g, p, rmat);
    }
  }
  if (cfg.audit) audit_dense(g, p, rmat);
  out.trace.final_q = modularity(p);
  out.partition = std::move(p);
  return out;
}

// Lazy global priority over per-vertex best responses.
//
// After a move by w, every RM of a vertex z outside the mover's
// neighbourhood and outside the target community rises by at most
// d_z * d_w. Each vertex is therefore stored with key = gain - d_z * T, where
// T is the running sum of mover degrees at evaluation time, and
// key + d_z * T_now bounds its current gain. Vertices of equal degree share a
// heap so that order by key equals order by bound. The mover, its neighbours
// and the target community are re-evaluated after every move; everything
// else is re-evaluated only when it surfaces at the top.
class IndexedEngine {
 public:
  IndexedEngine(const Graph& g, Partition& p, const NashConfig& cfg)
      : g_(g),
        p_(p),
        cfg_(cfg),
        scale_(rm_scale(g.edge_count())),
        counter_(p.community_count()),
        head_(p.community_count(), kNoVertex),
        next_(g.vertex_count(), kNoVertex),
        prev_(g.vertex_count(), kNoVertex),
        target_(g.vertex_count(), kNoCommunity),
        evaluated_at_(g.vertex_count(), 0),
        key_(g.vertex_count(), 0),
        pos_(g.vertex_count(), kNoVertex) {
    for (CommunityId c : p_.live_communities()) {
      by_degree_.emplace(p_.total_degree(c), c);
    }
    for (VertexId v = static_cast<VertexId>(g_.vertex_count()); v-- > 0;) {
      link(v, p_.community_of(v));
      const std::uint32_t d = g_.degree(v);
      if (d >= bucket_of_degree_.size()) bucket_of_degree_.resize(d + 1, kNone);
      if (bucket_of_degree_[d] == kNone) {
        bucket_of_degree_[d] = static_cast<std::uint32_t>(buckets_.size());
        buckets_.push_back({d, {}});
      }
    }
    for (VertexId v = 0; v < g_.vertex_count(); ++v) refresh(v);
  }

  std::optional<Candidate> next() {
    while (true) {
      const Bucket* top = nullptr;
      i128 top_bound = 0;
      for (const Bucket& b : buckets_) {
        if (b.heap.empty()) continue;
        const VertexId v = b.heap.front();
        const i128 bound = key_[v] + static_cast<i128>(b.degree) * total_;
        if (top == nullptr || bound > top_bound ||
            (bound == top_bound && v < top->heap.front())) {
          top = &b;
          top_bound = bound;
        }
      }
      if (top == nullptr) return std::nullopt;
      if (!(static_cast<double>(top_bound) * scale_ > cfg_.epsilon)) {
        return std::nullopt;
      }
      const VertexId z = top->heap.front();
      if (evaluated_at_[z] == step_) {
        return Candidate{static_cast<i64>(top_bound), z, target_[z]};
      }
      refresh(z);
    }
  }

  Move apply(const Candidate& c) {
    const VertexId w = c.vertex;
    const CommunityId from = p_.community_of(w);
    const CommunityId to = c.target;
    by_degree_.erase({p_.total_degree(from), from});
    by_degree_.erase({p_.total_degree(to), to});
    p_.move(g_, w, to);
    if (p_.is_live(from)) by_degree_.emplace(p_.total_degree(from), from);
    by_degree_.emplace(p_.total_degree(to), to);
    unlink(w, from);
    link(w, to);

    ++step_;
    total_ += g_.degree(w);
    refresh(w);
    for (VertexId x : g_.neighbors(w)) refresh(x);
    for (VertexId x = head_[to]; x != kNoVertex; x = next_[x]) {
      if (evaluated_at_[x] != step_) refresh(x);
    }
    return Move{w, from, to, static_cast<double>(c.numerator) * scale_,
                modularity(p_)};
  }

  void audit() {
    p_.audit(g_);
    const auto live = sorted_live(p_);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      counter_.count(g_, p_, v);
      const BestResponse fresh = evaluate(g_, p_, v, live, counter_);
      const bool queued = pos_[v] != kNoVertex;
      bool ok = true;
      if (fresh.target == kNoCommunity) {
        ok = !queued || evaluated_at_[v] != step_;
      } else if (!queued) {
        ok = false;
      } else {
        const i128 bound = key_[v] + static_cast<i128>(g_.degree(v)) * total_;
        ok = static_cast<i128>(fresh.numerator) <= bound &&
             (evaluated_at_[v] != step_ ||
              (static_cast<i128>(fresh.numerator) == bound &&
               fresh.target == target_[v]));
      }
      if (!ok) {
        throw Error(ErrorCode::kAuditFailure,
                    "indexed best response of vertex " + std::to_string(v) +
                        " disagrees with recomputation");
      }
    }
    for (const Bucket& b : buckets_) {
      for (std::size_t i = 1; i < b.heap.size(); ++i) {
        if (above(b.heap[i], b.heap[(i - 1) / 2])) {
          throw Error(ErrorCode::kAuditFailure, "indexed heap order violated");
        }
      }
    }
  }

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  static constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

  // Max-heap of vertices of one degree, ordered by key then lowest id.
  struct Bucket {
    std::uint32_t degree;
    std::vector<VertexId> heap;
  };

  void link(VertexId v, CommunityId c) {
    prev_[v] = kNoVertex;
    next_[v] = head_[c];
    if (head_[c] != kNoVertex) prev_[head_[c]] = v;
    head_[c] = v;
  }

  void unlink(VertexId v, CommunityId c) {
    if (prev_[v] != kNoVertex) {
      next_[prev_[v]] = next_[v];
    } else {
      head_[c] = next_[v];
    }
    if (next_[v] != kNoVertex) prev_[next_[v]] = prev_[v];
  }

  bool above(VertexId a, VertexId b) const {
    return key_[a] > key_[b] || (key_[a] == key_[b] && a < b);
  }

  void place(std::vector<VertexId>& heap, std::size_t i, VertexId v) {
    heap[i] = v;
    pos_[v] = static_cast<VertexId>(i);
  }

  void sift_up(std::vector<VertexId>& heap, std::size_t i) {
    const VertexId v = heap[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!above(v, heap[parent])) break;
      place(heap, i, heap[parent]);
      i = parent;
    }
    place(heap, i, v);
  }

  void sift_down(std::vector<VertexId>& heap, std::size_t i) {
    const VertexId v = heap[i];
    const std::size_t n = heap.size();
    while (true) {
      std::size_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && above(heap[child + 1], heap[child])) ++child;
      if (!above(heap[child], v)) break;
      place(heap, i, heap[child]);
      i = child;
    }
    place(heap, i, v);
  }

  void remove(std::vector<VertexId>& heap, VertexId v) {
    const std::size_t i = pos_[v];
    pos_[v] = kNoVertex;
    const VertexId last = heap.back();
    heap.pop_back();
    if (last == v) return;
    place(heap, i, last);
    sift_up(heap, i);
    sift_down(heap, pos_[last]);
  }

  void refresh(VertexId v) {
    counter_.count(g_, p_, v);
    const BestResponse best = evaluate(g_, p_, v, by_degree_, counter_);
    evaluated_at_[v] = step_;
    target_[v] = best.target;
    auto& heap = buckets_[bucket_of_degree_[g_.degree(v)]].heap;
    if (best.target == kNoCommunity) {
      if (pos_[v] != kNoVertex) remove(heap, v);
      return;
    }
    key_[v] = static_cast<i128>(best.numerator) -
              static_cast<i128>(g_.degree(v)) * total_;
    if (pos_[v] == kNoVertex) {
      heap.push_back(v);
      sift_up(heap, heap.size() - 1);
    } else {
      const std::size_t i = pos_[v];
      sift_up(heap, i);
      sift_down(heap, pos_[v]);
    }
  }

  const Graph& g_;
  Partition& p_;
  const NashConfig& cfg_;
  double scale_;
  LinkCounter counter_;
  std::set<std::pair<std::uint64_t, CommunityId>> by_degree_;
  std::vector<VertexId> head_;
  std::vector<VertexId> next_;
  std::vector<VertexId> prev_;
  std::vector<CommunityId> target_;
  std::vector<std::uint64_t> evaluated_at_;
  std::vector<i128> key_;
  std::vector<VertexId> pos_;
  std::vector<std::uint32_t> bucket_of_degree_;
  std::vector<Bucket> buckets_;
  std::uint64_t step_ = 0;
  i128 total_ = 0;
};

NashResult run_indexed(const Graph& g, Partition p, const NashConfig& cfg,
                       std::size_t cap) {
  NashResult out;
  out.trace.seed_q = modularity(p);
  {
    IndexedEngine engine(g, p, cfg);
    while (auto candidate = engine.next()) {
      check_cap(out.trace, cap);
      out.trace.steps.push_back(engine.apply(*candidate));
      if (cfg.audit && cfg.audit_interval > 0 &&
          out.trace.steps.size() % cfg.audit_interval == 0) {
        engine.audit();
      }
    }
    if (cfg.audit) engine.audit();
  }
  out.trace.final_q = modularity(p);
  out.partition = std::move(p);
  return out;
}

constexpr std::size_t kDenseCellLimit = std::size_t{1} << 20;

}  // namespace

NashResult to_nash_equilibrium(const Graph& graph, Partition seed,
                               const NashConfig& cfg) {
  if (seed.vertex_count() != graph.vertex_count() ||
      seed.graph_edge_count() != graph.edge_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition does not belong to this graph");
  }
  if (!(cfg.epsilon >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be non-negative");
  }
  const std::size_t cap = cfg.max_steps > 0 ? cfg.max_steps : default_cap(seed);
  NashConfig::Engine engine = cfg.engine;
  if (engine == NashConfig::Engine::kAutomatic) {
    engine = seed.community_count() * graph.vertex_count() <= kDenseCellLimit
                 ? NashConfig::Engine::kDense
                 : NashConfig::Engine::kIndexed;
  }
  if (engine == NashConfig::Engine::kDense) {
    return run_dense(graph, std::move(seed), cfg, cap);
  }
  return run_indexed(graph, std::move(seed), cfg, cap);
}

bool is_nash_equilibrium(const Graph& graph, const Partition& partition,
                         double epsilon) {
  return unstable_vertices(graph, partition, epsilon).empty();
}

std::vector<UnstableVertex> unstable_vertices(const RMatrix& rmat,
                                              double epsilon) {
  std::vector<UnstableVertex> out;
  const std::size_t n = rmat.vertex_count();
  std::vector<Candidate> best(n);
  for (CommunityId c = 0; c < rmat.community_count(); ++c) {
    if (!rmat.is_live(c)) continue;
    for (VertexId v = 0; v < n; ++v) {
      const i64 x = rmat.numerator(c, v);
      if (best[v].target == kNoCommunity || x > best[v].numerator) {
        best[v] = {x, v, c};
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (best[v].target != kNoCommunity &&
        is_positive(best[v].numerator, rmat.scale(), epsilon)) {
      out.push_back({v, best[v].target, rmat.at(best[v].target, v)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.rm > b.rm;
  });
  return out;
}

std::vector<UnstableVertex> unstable_vertices(const Graph& graph,
                                              const Partition& partition,
                                              double epsilon) {
  if (partition.vertex_count() != graph.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition does not belong to this graph");
  }
  const auto live = sorted_live(partition);
  const double scale = rm_scale(graph.edge_count());
  LinkCounter counter(partition.community_count());
  std::vector<UnstableVertex> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    counter.count(graph, partition, v);
    const BestResponse b = evaluate(graph, partition, v, live, counter);
    if (b.target != kNoCommunity && is_positive(b.numerator, scale, epsilon)) {
      out.push_back({v, b.target, static_cast<double>(b.numerator) * scale});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.rm > b.rm;
  });
  return out;
}

}  // namespace nashcd
