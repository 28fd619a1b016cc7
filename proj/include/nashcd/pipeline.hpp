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

#ifndef NASHCD_PIPELINE_HPP_
#define NASHCD_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nashcd/graph.hpp"
#include "nashcd/graph_io.hpp"
#include "nashcd/louvain.hpp"
#include "nashcd/overlap.hpp"
#include "nashcd/partition.hpp"
#include "nashcd/reassignment.hpp"

namespace nashcd {

struct EmitFlags {
  bool partition = true;
  bool legitimacy = true;
  bool rm = true;
  bool trace = true;
  bool summary = true;
};

/// Comma-separated subset of "partition,legitimacy,rm,trace,summary", or
/// "all" / "none". Throws kInvalidArgument on unknown names.
EmitFlags parse_emit_flags(std::string_view text);

struct RunConfig {
  std::filesystem::path input;
  GraphKind kind = GraphKind::kAuto;
  std::optional<std::filesystem::path> labels;
  LouvainConfig louvain;
  NashConfig nash;
  // Unset picks default_legitimacy_mode() of the loaded graph.
  std::optional<LegitimacyMode> legitimacy_mode;
  std::filesystem::path out_dir = ".";
  EmitFlags emit;
  bool summary_json = false;
};

struct RunSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  GraphKind kind = GraphKind::kUnipartite;
  std::size_t dropped_self_loops = 0;
  std::size_t communities_seed = 0;
  std::size_t communities_final = 0;
  double q_seed = 0.0;
  double q_final = 0.0;
  std::size_t moves = 0;
  std::size_t unstable_at_seed = 0;
  double seconds_load = 0.0;
  double seconds_louvain = 0.0;
  double seconds_nash = 0.0;
  double seconds_output = 0.0;
};

/// Load, Louvain seed, overlap and RM matrices, best-response dynamics,
/// outputs. Files written to cfg.out_dir (each via a temporary and rename):
///
///   partition_seed.txt, partition.txt    "<label>\t<community>"
///   legitimacy_{seed,ne}[_u|_v].csv      one row per community
///   rm_{seed,ne}[_u|_v].csv
///   trace.tsv                            one line per applied move
///   summary.txt [, summary.json]
///
/// Block graphs get separate _u and _v matrices. Community ids in the trace
/// are those of partition_seed.txt; partition.txt is renumbered densely.
/// On StepCapExceeded the trace gathered so far is written before rethrow.
RunSummary run(const RunConfig& cfg);

/// Renders `summary` as "key: value" lines.
std::string format_summary(const RunSummary& summary);
std::string format_summary_json(const RunSummary& summary);

/// "%.6f" with negative zero folded to zero.
std::string format_fixed6(double value);

}  // namespace nashcd

#endif  // NASHCD_PIPELINE_HPP_
