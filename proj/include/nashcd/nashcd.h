/* Copyright 2026 The nashcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libnashcd.
 *
 * Every fallible call returns a nashcd_status; on failure a description is
 * available from nashcd_last_error() on the same thread until the next call.
 * Handles are opaque and owned by the caller, who releases them with the
 * matching *_free function (passing NULL is allowed).
 */

#ifndef NASHCD_H_
#define NASHCD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(NASHCD_BUILDING)
#define NASHCD_API __declspec(dllexport)
#else
#define NASHCD_API __declspec(dllimport)
#endif
#else
#define NASHCD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nashcd_status {
  NASHCD_OK = 0,
  NASHCD_INVALID_ARGUMENT = 1,
  NASHCD_PARSE_ERROR = 2,
  NASHCD_STEP_CAP_EXCEEDED = 3,
  NASHCD_IO_ERROR = 4,
  NASHCD_AUDIT_FAILURE = 5,
  NASHCD_INTERNAL_ERROR = 6
} nashcd_status;

typedef enum nashcd_graph_kind {
  NASHCD_KIND_AUTO = 0,
  NASHCD_KIND_UNIPARTITE = 1,
  NASHCD_KIND_BIPARTITE = 2,
  NASHCD_KIND_DIRECTED = 3
} nashcd_graph_kind;

typedef enum nashcd_legitimacy_mode {
  NASHCD_LEGITIMACY_DEFAULT = 0, /* opposite for block graphs, else all */
  NASHCD_LEGITIMACY_ALL = 1,
  NASHCD_LEGITIMACY_OPPOSITE = 2
} nashcd_legitimacy_mode;

typedef enum nashcd_engine {
  NASHCD_ENGINE_AUTOMATIC = 0,
  NASHCD_ENGINE_DENSE = 1,
  NASHCD_ENGINE_INDEXED = 2
} nashcd_engine;

typedef struct nashcd_graph nashcd_graph;
typedef struct nashcd_partition nashcd_partition;
typedef struct nashcd_trace nashcd_trace;

typedef struct nashcd_louvain_config {
  double min_gain;
  size_t max_levels;
  int seeded_scan; /* 0: ascending vertex order, else shuffled by seed */
  uint64_t seed;
} nashcd_louvain_config;

typedef struct nashcd_nash_config {
  double epsilon;
  size_t max_steps; /* 0: 10 * n * live communities */
  nashcd_engine engine;
  int audit;
  size_t audit_interval;
} nashcd_nash_config;

typedef struct nashcd_move {
  uint32_t vertex;
  uint32_t from;
  uint32_t to;
  double rm;
  double q_after;
} nashcd_move;

typedef struct nashcd_run_config {
  const char* input;
  nashcd_graph_kind kind;
  const char* labels; /* optional sidecar, may be NULL */
  const char* out_dir;
  const char* emit;   /* e.g. "partition,trace,summary"; NULL for all */
  int summary_json;
  nashcd_legitimacy_mode legitimacy_mode;
  nashcd_louvain_config louvain;
  nashcd_nash_config nash;
} nashcd_run_config;

typedef struct nashcd_run_summary {
  size_t vertices;
  size_t edges;
  nashcd_graph_kind kind;
  size_t dropped_self_loops;
  size_t communities_seed;
  size_t communities_final;
  double q_seed;
  double q_final;
  size_t moves;
  size_t unstable_at_seed;
  double seconds_load;
  double seconds_louvain;
  double seconds_nash;
  double seconds_output;
} nashcd_run_summary;

typedef void (*nashcd_warning_fn)(const char* message, void* user_data);

NASHCD_API const char* nashcd_version(void);
NASHCD_API const char* nashcd_last_error(void);
NASHCD_API const char* nashcd_status_string(nashcd_status status);

/* NULL restores the default (stderr). */
NASHCD_API void nashcd_set_warning_handler(nashcd_warning_fn fn, void* user_data);

NASHCD_API void nashcd_louvain_config_init(nashcd_louvain_config* cfg);
NASHCD_API void nashcd_nash_config_init(nashcd_nash_config* cfg);
NASHCD_API void nashcd_run_config_init(nashcd_run_config* cfg);

/* Graphs. `edges` holds 2 * edge_count ids as (u0, v0, u1, v1, ...). */
NASHCD_API nashcd_status nashcd_graph_from_edges(const uint32_t* edges,
                                                 size_t edge_count,
                                                 size_t vertex_count,
                                                 nashcd_graph** out);
NASHCD_API nashcd_status nashcd_graph_from_bipartite(const uint32_t* edges,
                                                     size_t edge_count,
                                                     size_t u_count,
                                                     size_t v_count,
                                                     nashcd_graph** out);
NASHCD_API nashcd_status nashcd_graph_from_directed(const uint32_t* arcs,
                                                    size_t arc_count,
                                                    size_t vertex_count,
                                                    nashcd_graph** out);
NASHCD_API nashcd_status nashcd_graph_read(const char* path,
                                           nashcd_graph_kind kind,
                                           nashcd_graph** out);
NASHCD_API void nashcd_graph_free(nashcd_graph* graph);
NASHCD_API size_t nashcd_graph_vertex_count(const nashcd_graph* graph);
NASHCD_API size_t nashcd_graph_edge_count(const nashcd_graph* graph);
NASHCD_API uint32_t nashcd_graph_degree(const nashcd_graph* graph, uint32_t v);
/* U-side size of a block graph, 0 for unipartite graphs. */
NASHCD_API size_t nashcd_graph_u_count(const nashcd_graph* graph);

/* Partitions. */
NASHCD_API nashcd_status nashcd_partition_create(const nashcd_graph* graph,
                                                 const uint32_t* assignment,
                                                 nashcd_partition** out);
NASHCD_API nashcd_status nashcd_louvain(const nashcd_graph* graph,
                                        const nashcd_louvain_config* cfg,
                                        nashcd_partition** out);
NASHCD_API void nashcd_partition_free(nashcd_partition* partition);
NASHCD_API size_t nashcd_partition_vertex_count(const nashcd_partition* p);
NASHCD_API size_t nashcd_partition_live_count(const nashcd_partition* p);
/* Copies the assignment into `out`, which holds vertex_count entries. */
NASHCD_API nashcd_status nashcd_partition_assignment(const nashcd_partition* p,
                                                     uint32_t* out,
                                                     size_t capacity);
NASHCD_API nashcd_status nashcd_partition_move(nashcd_partition* p,
                                               const nashcd_graph* graph,
                                               uint32_t vertex,
                                               uint32_t target);

/* Measures. */
NASHCD_API nashcd_status nashcd_modularity(const nashcd_graph* graph,
                                           const nashcd_partition* p,
                                           double* out);
NASHCD_API nashcd_status nashcd_rm(const nashcd_graph* graph,
                                   const nashcd_partition* p, uint32_t vertex,
                                   uint32_t target, double* out);
NASHCD_API nashcd_status nashcd_legitimacy(const nashcd_graph* graph,
                                           const nashcd_partition* p,
                                           uint32_t vertex, uint32_t community,
                                           nashcd_legitimacy_mode mode,
                                           double* out);
NASHCD_API nashcd_status nashcd_is_nash_equilibrium(const nashcd_graph* graph,
                                                    const nashcd_partition* p,
                                                    double epsilon,
                                                    int* out);
/* Number of vertices with an RM above epsilon. */
NASHCD_API nashcd_status nashcd_unstable_count(const nashcd_graph* graph,
                                               const nashcd_partition* p,
                                               double epsilon, size_t* out);

/* Drives `p` to an equilibrium in place. `trace` may be NULL. On
 * NASHCD_STEP_CAP_EXCEEDED `p` is unchanged and *trace (when requested)
 * holds the moves made before the cap. */
NASHCD_API nashcd_status nashcd_nash_equilibrium(const nashcd_graph* graph,
                                                 nashcd_partition* p,
                                                 const nashcd_nash_config* cfg,
                                                 nashcd_trace** trace);
NASHCD_API void nashcd_trace_free(nashcd_trace* trace);
NASHCD_API size_t nashcd_trace_length(const nashcd_trace* trace);
NASHCD_API double nashcd_trace_seed_q(const nashcd_trace* trace);
NASHCD_API double nashcd_trace_final_q(const nashcd_trace* trace);
NASHCD_API nashcd_status nashcd_trace_step(const nashcd_trace* trace,
                                           size_t index, nashcd_move* out);

/* Whole pipeline; `summary` may be NULL. */
NASHCD_API nashcd_status nashcd_run(const nashcd_run_config* cfg,
                                    nashcd_run_summary* summary);
/* Re-scores a partition file written by nashcd_run. */
NASHCD_API nashcd_status nashcd_score(const char* graph_path,
                                      nashcd_graph_kind kind,
                                      const char* labels_path,
                                      const char* partition_path,
                                      double* modularity, int* is_equilibrium);
/* Writes the author x paper style synthetic bipartite graph. */
NASHCD_API nashcd_status nashcd_write_synthetic_bipartite(const char* path,
                                                          size_t u_count,
                                                          size_t v_count,
                                                          size_t groups,
                                                          uint64_t seed);

#ifdef __cplusplus
}
#endif

#endif /* NASHCD_H_ */
