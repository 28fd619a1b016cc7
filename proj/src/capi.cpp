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

#include "nashcd/nashcd.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "nashcd/error.hpp"
#include "nashcd/graph_io.hpp"
#include "nashcd/modularity.hpp"
#include "nashcd/pipeline.hpp"
#include "nashcd/synthetic.hpp"

struct nashcd_graph {
  nashcd::LoadedGraph loaded;
};

struct nashcd_partition {
  nashcd::Partition partition;
};

struct nashcd_trace {
  nashcd::EquilibriumTrace trace;
};

namespace {

thread_local std::string g_last_error;

nashcd_status set_error(nashcd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

nashcd_status status_of(nashcd::ErrorCode code) {
  switch (code) {
    case nashcd::ErrorCode::kInvalidArgument:
      return NASHCD_INVALID_ARGUMENT;
    case nashcd::ErrorCode::kParseError:
      return NASHCD_PARSE_ERROR;
    case nashcd::ErrorCode::kStepCapExceeded:
      return NASHCD_STEP_CAP_EXCEEDED;
    case nashcd::ErrorCode::kIoError:
      return NASHCD_IO_ERROR;
    case nashcd::ErrorCode::kAuditFailure:
      return NASHCD_AUDIT_FAILURE;
  }
  return NASHCD_INTERNAL_ERROR;
}

template <class F>
nashcd_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return NASHCD_OK;
  } catch (const nashcd::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(NASHCD_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(NASHCD_INTERNAL_ERROR, e.what());
  } catch (...) {
    return set_error(NASHCD_INTERNAL_ERROR, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw nashcd::Error(nashcd::ErrorCode::kInvalidArgument, what);
}

nashcd::GraphKind to_kind(nashcd_graph_kind k) {
  switch (k) {
    case NASHCD_KIND_AUTO:
      return nashcd::GraphKind::kAuto;
    case NASHCD_KIND_UNIPARTITE:
      return nashcd::GraphKind::kUnipartite;
    case NASHCD_KIND_BIPARTITE:
      return nashcd::GraphKind::kBipartite;
    case NASHCD_KIND_DIRECTED:
      return nashcd::GraphKind::kDirected;
  }
  throw nashcd::Error(nashcd::ErrorCode::kInvalidArgument, "unknown graph kind");
}

nashcd_graph_kind from_kind(nashcd::GraphKind k) {
  switch (k) {
    case nashcd::GraphKind::kUnipartite:
      return NASHCD_KIND_UNIPARTITE;
    case nashcd::GraphKind::kBipartite:
      return NASHCD_KIND_BIPARTITE;
    case nashcd::GraphKind::kDirected:
      return NASHCD_KIND_DIRECTED;
    case nashcd::GraphKind::kAuto:
      break;
  }
  return NASHCD_KIND_AUTO;
}

std::optional<nashcd::LegitimacyMode> to_mode(nashcd_legitimacy_mode m) {
  switch (m) {
    case NASHCD_LEGITIMACY_DEFAULT:
      return std::nullopt;
    case NASHCD_LEGITIMACY_ALL:
      return nashcd::LegitimacyMode::kAll;
    case NASHCD_LEGITIMACY_OPPOSITE:
      return nashcd::LegitimacyMode::kOpposite;
  }
  throw nashcd::Error(nashcd::ErrorCode::kInvalidArgument,
                      "unknown legitimacy mode");
}

nashcd::LouvainConfig to_louvain(const nashcd_louvain_config* c) {
  nashcd::LouvainConfig out;
  if (c == nullptr) return out;
  out.min_gain = c->min_gain;
  out.max_levels = c->max_levels;
  out.scan = c->seeded_scan ? nashcd::LouvainConfig::Scan::kSeeded
                            : nashcd::LouvainConfig::Scan::kFixed;
  out.seed = c->seed;
  return out;
}

nashcd::NashConfig to_nash(const nashcd_nash_config* c) {
  nashcd::NashConfig out;
  if (c == nullptr) return out;
  out.epsilon = c->epsilon;
  out.max_steps = c->max_steps;
  switch (c->engine) {
    case NASHCD_ENGINE_AUTOMATIC:
      out.engine = nashcd::NashConfig::Engine::kAutomatic;
      break;
    case NASHCD_ENGINE_DENSE:
      out.engine = nashcd::NashConfig::Engine::kDense;
      break;
    case NASHCD_ENGINE_INDEXED:
      out.engine = nashcd::NashConfig::Engine::kIndexed;
      break;
    default:
      throw nashcd::Error(nashcd::ErrorCode::kInvalidArgument, "unknown engine");
  }
  out.audit = c->audit != 0;
  out.audit_interval = c->audit_interval;
  return out;
}

std::vector<nashcd::Edge> to_edges(const uint32_t* ids, size_t count) {
  require(ids != nullptr || count == 0, "edge array is NULL");
  std::vector<nashcd::Edge> edges(count);
  for (size_t i = 0; i < count; ++i) edges[i] = {ids[2 * i], ids[2 * i + 1]};
  return edges;
}

void check_pair(const nashcd_graph* g, const nashcd_partition* p) {
  require(g != nullptr && p != nullptr, "NULL handle");
  require(p->partition.vertex_count() == g->loaded.graph.vertex_count() &&
              p->partition.graph_edge_count() == g->loaded.graph.edge_count(),
          "partition does not belong to this graph");
}

struct WarningSink {
  std::mutex mu;
  nashcd_warning_fn fn = nullptr;
  void* user = nullptr;
};

WarningSink& warning_sink() {
  static WarningSink s;
  return s;
}

}  // namespace

extern "C" {

const char* nashcd_version(void) { return "0.1.0"; }

const char* nashcd_last_error(void) { return g_last_error.c_str(); }

const char* nashcd_status_string(nashcd_status status) {
  switch (status) {
    case NASHCD_OK:
      return "ok";
    case NASHCD_INVALID_ARGUMENT:
      return "invalid argument";
    case NASHCD_PARSE_ERROR:
      return "parse error";
    case NASHCD_STEP_CAP_EXCEEDED:
      return "step cap exceeded";
    case NASHCD_IO_ERROR:
      return "i/o error";
    case NASHCD_AUDIT_FAILURE:
      return "audit failure";
    case NASHCD_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

void nashcd_set_warning_handler(nashcd_warning_fn fn, void* user_data) {
  WarningSink& s = warning_sink();
  {
    std::lock_guard lock(s.mu);
    s.fn = fn;
    s.user = user_data;
  }
  if (fn == nullptr) {
    nashcd::set_warning_handler({});
    return;
  }
  nashcd::set_warning_handler([](std::string_view msg) {
    WarningSink& sink = warning_sink();
    std::lock_guard lock(sink.mu);
    if (sink.fn != nullptr) sink.fn(std::string(msg).c_str(), sink.user);
  });
}

void nashcd_louvain_config_init(nashcd_louvain_config* cfg) {
  if (cfg == nullptr) return;
  const nashcd::LouvainConfig d;
  cfg->min_gain = d.min_gain;
  cfg->max_levels = d.max_levels;
  cfg->seeded_scan = 0;
  cfg->seed = d.seed;
}

void nashcd_nash_config_init(nashcd_nash_config* cfg) {
  if (cfg == nullptr) return;
  const nashcd::NashConfig d;
  cfg->epsilon = d.epsilon;
  cfg->max_steps = d.max_steps;
  cfg->engine = NASHCD_ENGINE_AUTOMATIC;
  cfg->audit = 0;
  cfg->audit_interval = d.audit_interval;
}

void nashcd_run_config_init(nashcd_run_config* cfg) {
  if (cfg == nullptr) return;
  cfg->input = nullptr;
  cfg->kind = NASHCD_KIND_AUTO;
  cfg->labels = nullptr;
  cfg->out_dir = ".";
  cfg->emit = nullptr;
  cfg->summary_json = 0;
  cfg->legitimacy_mode = NASHCD_LEGITIMACY_DEFAULT;
  nashcd_louvain_config_init(&cfg->louvain);
  nashcd_nash_config_init(&cfg->nash);
}

nashcd_status nashcd_graph_from_edges(const uint32_t* edges, size_t edge_count,
                                      size_t vertex_count, nashcd_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    auto g = std::make_unique<nashcd_graph>();
    g->loaded.kind = nashcd::GraphKind::kUnipartite;
    g->loaded.graph =
        nashcd::Graph::from_edges(to_edges(edges, edge_count), vertex_count);
    *out = g.release();
  });
}

nashcd_status nashcd_graph_from_bipartite(const uint32_t* edges,
                                          size_t edge_count, size_t u_count,
                                          size_t v_count, nashcd_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    auto g = std::make_unique<nashcd_graph>();
    g->loaded.kind = nashcd::GraphKind::kBipartite;
    g->loaded.bipartite = nashcd::BipartiteGraph::from_edges(
        to_edges(edges, edge_count), u_count, v_count);
    g->loaded.graph = nashcd::to_block_unipartite(*g->loaded.bipartite);
    *out = g.release();
  });
}

nashcd_status nashcd_graph_from_directed(const uint32_t* arcs, size_t arc_count,
                                         size_t vertex_count,
                                         nashcd_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    auto g = std::make_unique<nashcd_graph>();
    g->loaded.kind = nashcd::GraphKind::kDirected;
    auto red = nashcd::directed_to_bipartite(to_edges(arcs, arc_count),
                                             vertex_count);
    g->loaded.dropped_self_loops = red.dropped_self_loops;
    g->loaded.bipartite = std::move(red.graph);
    g->loaded.graph = nashcd::to_block_unipartite(*g->loaded.bipartite);
    *out = g.release();
  });
}

nashcd_status nashcd_graph_read(const char* path, nashcd_graph_kind kind,
                                nashcd_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "NULL argument");
    auto g = std::make_unique<nashcd_graph>();
    g->loaded = nashcd::read_graph_file(path, to_kind(kind));
    *out = g.release();
  });
}

void nashcd_graph_free(nashcd_graph* graph) { delete graph; }

size_t nashcd_graph_vertex_count(const nashcd_graph* graph) {
  return graph ? graph->loaded.graph.vertex_count() : 0;
}

size_t nashcd_graph_edge_count(const nashcd_graph* graph) {
  return graph ? graph->loaded.graph.edge_count() : 0;
}

uint32_t nashcd_graph_degree(const nashcd_graph* graph, uint32_t v) {
  if (graph == nullptr || v >= graph->loaded.graph.vertex_count()) return 0;
  return graph->loaded.graph.degree(v);
}

size_t nashcd_graph_u_count(const nashcd_graph* graph) {
  if (graph == nullptr || !graph->loaded.graph.block_layout()) return 0;
  return graph->loaded.graph.block_layout()->u_count;
}

nashcd_status nashcd_partition_create(const nashcd_graph* graph,
                                      const uint32_t* assignment,
                                      nashcd_partition** out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "NULL argument");
    const size_t n = graph->loaded.graph.vertex_count();
    require(assignment != nullptr || n == 0, "assignment is NULL");
    std::vector<nashcd::CommunityId> a(assignment, assignment + n);
    auto p = std::make_unique<nashcd_partition>();
    p->partition = nashcd::Partition(graph->loaded.graph, std::move(a));
    *out = p.release();
  });
}

nashcd_status nashcd_louvain(const nashcd_graph* graph,
                             const nashcd_louvain_config* cfg,
                             nashcd_partition** out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "NULL argument");
    auto p = std::make_unique<nashcd_partition>();
    p->partition = nashcd::louvain(graph->loaded.graph, to_louvain(cfg));
    *out = p.release();
  });
}

void nashcd_partition_free(nashcd_partition* partition) { delete partition; }

size_t nashcd_partition_vertex_count(const nashcd_partition* p) {
  return p ? p->partition.vertex_count() : 0;
}

size_t nashcd_partition_live_count(const nashcd_partition* p) {
  return p ? p->partition.live_count() : 0;
}

nashcd_status nashcd_partition_assignment(const nashcd_partition* p,
                                          uint32_t* out, size_t capacity) {
  return guarded([&] {
    require(p != nullptr, "NULL handle");
    const auto& a = p->partition.assignment();
    require(capacity >= a.size(), "buffer too small");
    require(out != nullptr || a.empty(), "output buffer is NULL");
    std::copy(a.begin(), a.end(), out);
  });
}

nashcd_status nashcd_partition_move(nashcd_partition* p,
                                    const nashcd_graph* graph, uint32_t vertex,
                                    uint32_t target) {
  return guarded([&] {
    check_pair(graph, p);
    p->partition.move(graph->loaded.graph, vertex, target);
  });
}

nashcd_status nashcd_modularity(const nashcd_graph* graph,
                                const nashcd_partition* p, double* out) {
  return guarded([&] {
    check_pair(graph, p);
    require(out != nullptr, "output pointer is NULL");
    *out = nashcd::modularity(graph->loaded.graph, p->partition);
  });
}

nashcd_status nashcd_rm(const nashcd_graph* graph, const nashcd_partition* p,
                        uint32_t vertex, uint32_t target, double* out) {
  return guarded([&] {
    check_pair(graph, p);
    require(out != nullptr, "output pointer is NULL");
    *out = nashcd::rm(graph->loaded.graph, p->partition, vertex, target);
  });
}

nashcd_status nashcd_legitimacy(const nashcd_graph* graph,
                                const nashcd_partition* p, uint32_t vertex,
                                uint32_t community,
                                nashcd_legitimacy_mode mode, double* out) {
  return guarded([&] {
    check_pair(graph, p);
    require(out != nullptr, "output pointer is NULL");
    const auto& g = graph->loaded.graph;
    const auto m = to_mode(mode).value_or(nashcd::default_legitimacy_mode(g));
    *out = nashcd::legitimacy(g, p->partition, vertex, community, m).value;
  });
}

nashcd_status nashcd_is_nash_equilibrium(const nashcd_graph* graph,
                                         const nashcd_partition* p,
                                         double epsilon, int* out) {
  return guarded([&] {
    check_pair(graph, p);
    require(out != nullptr, "output pointer is NULL");
    *out = nashcd::is_nash_equilibrium(graph->loaded.graph, p->partition,
                                       epsilon)
               ? 1
               : 0;
  });
}

nashcd_status nashcd_unstable_count(const nashcd_graph* graph,
                                    const nashcd_partition* p, double epsilon,
                                    size_t* out) {
  return guarded([&] {
    check_pair(graph, p);
    require(out != nullptr, "output pointer is NULL");
    *out = nashcd::unstable_vertices(graph->loaded.graph, p->partition, epsilon)
               .size();
  });
}

nashcd_status nashcd_nash_equilibrium(const nashcd_graph* graph,
                                      nashcd_partition* p,
                                      const nashcd_nash_config* cfg,
                                      nashcd_trace** trace) {
  return guarded([&] {
    check_pair(graph, p);
    if (trace != nullptr) *trace = nullptr;
    try {
      auto result =
          nashcd::to_nash_equilibrium(graph->loaded.graph, p->partition, to_nash(cfg));
      p->partition = std::move(result.partition);
      if (trace != nullptr) *trace = new nashcd_trace{std::move(result.trace)};
    } catch (const nashcd::StepCapExceeded& e) {
      if (trace != nullptr) *trace = new nashcd_trace{e.trace()};
      throw;
    }
  });
}

void nashcd_trace_free(nashcd_trace* trace) { delete trace; }

size_t nashcd_trace_length(const nashcd_trace* trace) {
  return trace ? trace->trace.steps.size() : 0;
}

double nashcd_trace_seed_q(const nashcd_trace* trace) {
  return trace ? trace->trace.seed_q : 0.0;
}

double nashcd_trace_final_q(const nashcd_trace* trace) {
  return trace ? trace->trace.final_q : 0.0;
}

nashcd_status nashcd_trace_step(const nashcd_trace* trace, size_t index,
                                nashcd_move* out) {
  return guarded([&] {
    require(trace != nullptr && out != nullptr, "NULL argument");
    require(index < trace->trace.steps.size(), "step index out of range");
    const nashcd::Move& m = trace->trace.steps[index];
    *out = {m.vertex, m.from, m.to, m.rm, m.q_after};
  });
}

nashcd_status nashcd_run(const nashcd_run_config* cfg,
                         nashcd_run_summary* summary) {
  return guarded([&] {
    require(cfg != nullptr && cfg->input != nullptr, "input path is NULL");
    nashcd::RunConfig rc;
    rc.input = cfg->input;
    rc.kind = to_kind(cfg->kind);
    if (cfg->labels != nullptr) rc.labels = std::filesystem::path(cfg->labels);
    rc.out_dir = cfg->out_dir != nullptr ? cfg->out_dir : ".";
    if (cfg->emit != nullptr) rc.emit = nashcd::parse_emit_flags(cfg->emit);
    rc.summary_json = cfg->summary_json != 0;
    rc.legitimacy_mode = to_mode(cfg->legitimacy_mode);
    rc.louvain = to_louvain(&cfg->louvain);
    rc.nash = to_nash(&cfg->nash);
    const nashcd::RunSummary s = nashcd::run(rc);
    if (summary != nullptr) {
      *summary = {s.vertices,         s.edges,
                  from_kind(s.kind),  s.dropped_self_loops,
                  s.communities_seed, s.communities_final,
                  s.q_seed,           s.q_final,
                  s.moves,            s.unstable_at_seed,
                  s.seconds_load,     s.seconds_louvain,
                  s.seconds_nash,     s.seconds_output};
    }
  });
}

nashcd_status nashcd_score(const char* graph_path, nashcd_graph_kind kind,
                           const char* labels_path, const char* partition_path,
                           double* modularity, int* is_equilibrium) {
  return guarded([&] {
    require(graph_path != nullptr && partition_path != nullptr,
            "NULL path");
    const auto loaded = nashcd::read_graph_file(graph_path, to_kind(kind));
    const auto labels = labels_path != nullptr
                            ? nashcd::read_labels(labels_path, loaded)
                            : nashcd::default_labels(loaded);
    std::ifstream in(partition_path);
    if (!in) {
      throw nashcd::Error(nashcd::ErrorCode::kIoError,
                          std::string("cannot open '") + partition_path + "'");
    }
    const nashcd::Partition p(loaded.graph, nashcd::read_partition(in, labels));
    if (modularity != nullptr) *modularity = nashcd::modularity(loaded.graph, p);
    if (is_equilibrium != nullptr) {
      *is_equilibrium = nashcd::is_nash_equilibrium(loaded.graph, p) ? 1 : 0;
    }
  });
}

nashcd_status nashcd_write_synthetic_bipartite(const char* path, size_t u_count,
                                               size_t v_count, size_t groups,
                                               uint64_t seed) {
  return guarded([&] {
    require(path != nullptr, "NULL path");
    nashcd::SyntheticConfig cfg;
    cfg.u_count = u_count;
    cfg.v_count = v_count;
    cfg.groups = groups;
    cfg.seed = seed;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw nashcd::Error(nashcd::ErrorCode::kIoError,
                          std::string("cannot write '") + path + "'");
    }
    nashcd::write_synthetic_bipartite(out, cfg);
    out.flush();
    if (!out) {
      throw nashcd::Error(nashcd::ErrorCode::kIoError,
                          std::string("write to '") + path + "' failed");
    }
  });
}

}  // extern "C"
