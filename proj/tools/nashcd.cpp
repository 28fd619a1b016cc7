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

// nashcd: Louvain seed, overlap matrices and best-response equilibrium.
//
//   nashcd run --input g.txt [--kind auto] [--out dir] [--emit list] ...
//   nashcd score --input g.txt --partition dir/partition.txt
//   nashcd generate --out synth.txt [--u 30000 --v 85000 --groups 184]
//
// Exit status: 0 success, 2 unreadable input, 3 equilibrium step cap hit,
// 1 anything else.

#include <cstdio>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "nashcd/nashcd.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitStepCap = 3;

const std::map<std::string, nashcd_graph_kind> kKinds = {
    {"auto", NASHCD_KIND_AUTO},
    {"unipartite", NASHCD_KIND_UNIPARTITE},
    {"bipartite", NASHCD_KIND_BIPARTITE},
    {"directed", NASHCD_KIND_DIRECTED},
};

const std::map<std::string, nashcd_legitimacy_mode> kModes = {
    {"default", NASHCD_LEGITIMACY_DEFAULT},
    {"all", NASHCD_LEGITIMACY_ALL},
    {"opposite", NASHCD_LEGITIMACY_OPPOSITE},
};

const std::map<std::string, nashcd_engine> kEngines = {
    {"auto", NASHCD_ENGINE_AUTOMATIC},
    {"dense", NASHCD_ENGINE_DENSE},
    {"indexed", NASHCD_ENGINE_INDEXED},
};

int report(nashcd_status status) {
  std::fprintf(stderr, "nashcd: %s: %s\n", nashcd_status_string(status),
               nashcd_last_error());
  switch (status) {
    case NASHCD_PARSE_ERROR:
      return kExitParse;
    case NASHCD_STEP_CAP_EXCEEDED:
      return kExitStepCap;
    default:
      return kExitFailure;
  }
}

void on_warning(const char* message, void*) {
  std::fprintf(stderr, "nashcd: warning: %s\n", message);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection refined to a Nash equilibrium of "
               "vertex reassignments"};
  app.set_version_flag("--version", nashcd_version());
  app.require_subcommand(1);

  nashcd_run_config cfg;
  nashcd_run_config_init(&cfg);
  std::string input, out_dir = ".", emit = "all", labels;
  nashcd_graph_kind kind = NASHCD_KIND_AUTO;
  nashcd_legitimacy_mode mode = NASHCD_LEGITIMACY_DEFAULT;
  nashcd_engine engine = NASHCD_ENGINE_AUTOMATIC;
  bool audit = false, summary_json = false, quiet = false;
  uint64_t seed = 0;
  bool seeded = false;

  CLI::App* run = app.add_subcommand("run", "Run the full pipeline");
  run->add_option("--input", input, "Edge list file")->required();
  run->add_option("--kind", kind, "Graph kind")
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case))
      ->default_str("auto");
  run->add_option("--labels", labels, "Sidecar file of 'id label' lines");
  run->add_option("--out", out_dir, "Output directory")->default_str(".");
  run->add_option("--epsilon", cfg.nash.epsilon,
                  "Smallest RM counted as an improvement")
      ->capture_default_str();
  run->add_option("--max-steps", cfg.nash.max_steps,
                  "Cap on equilibrium moves (0: 10 * n * communities)")
      ->capture_default_str();
  run->add_option("--min-gain", cfg.louvain.min_gain,
                  "Louvain sweep stops below this modularity gain")
      ->capture_default_str();
  run->add_option("--max-levels", cfg.louvain.max_levels,
                  "Louvain aggregation levels")
      ->capture_default_str();
  run->add_option("--legitimacy-mode", mode, "Legitimacy denominator")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->default_str("default");
  run->add_option("--emit", emit,
                  "Comma list of partition,legitimacy,rm,trace,summary; "
                  "or all, none")
      ->default_str("all");
  run->add_option("--engine", engine, "Equilibrium engine")
      ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case))
      ->default_str("auto");
  run->add_flag("--audit", audit,
                "Recompute RM from scratch periodically and compare");
  auto* seed_opt = run->add_option(
      "--seed", seed, "Shuffle the Louvain vertex order with this seed");
  run->add_flag("--summary-json", summary_json, "Also write summary.json");
  run->add_flag("-q,--quiet", quiet, "Do not print the summary");

  std::string score_input, score_partition, score_labels;
  nashcd_graph_kind score_kind = NASHCD_KIND_AUTO;
  CLI::App* score =
      app.add_subcommand("score", "Modularity and stability of a partition");
  score->add_option("--input", score_input, "Edge list file")->required();
  score->add_option("--kind", score_kind, "Graph kind")
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case))
      ->default_str("auto");
  score->add_option("--labels", score_labels, "Sidecar label file");
  score->add_option("--partition", score_partition, "Partition file")
      ->required();

  std::string gen_out;
  size_t gen_u = 30000, gen_v = 85000, gen_groups = 184;
  uint64_t gen_seed = 1;
  CLI::App* generate = app.add_subcommand(
      "generate", "Write a synthetic author x paper bipartite graph");
  generate->add_option("--out", gen_out, "Output file")->required();
  generate->add_option("--u", gen_u, "Authors")->capture_default_str();
  generate->add_option("--v", gen_v, "Papers")->capture_default_str();
  generate->add_option("--groups", gen_groups, "Author groups")
      ->capture_default_str();
  generate->add_option("--seed", gen_seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFailure;
  }
  nashcd_set_warning_handler(on_warning, nullptr);

  if (*run) {
    seeded = seed_opt->count() > 0;
    cfg.input = input.c_str();
    cfg.kind = kind;
    cfg.labels = labels.empty() ? nullptr : labels.c_str();
    cfg.out_dir = out_dir.c_str();
    cfg.emit = emit.c_str();
    cfg.summary_json = summary_json ? 1 : 0;
    cfg.legitimacy_mode = mode;
    cfg.louvain.seeded_scan = seeded ? 1 : 0;
    cfg.louvain.seed = seed;
    cfg.nash.engine = engine;
    cfg.nash.audit = audit ? 1 : 0;
    nashcd_run_summary s;
    const nashcd_status st = nashcd_run(&cfg, &s);
    if (st != NASHCD_OK) {
      const int code = report(st);
      if (st == NASHCD_STEP_CAP_EXCEEDED) {
        std::fprintf(stderr, "nashcd: moves so far are in %s/trace.tsv\n",
                     out_dir.c_str());
      }
      return code;
    }
    if (!quiet) {
      std::printf("vertices: %zu\nedges: %zu\n", s.vertices, s.edges);
      std::printf("communities: %zu -> %zu\n", s.communities_seed,
                  s.communities_final);
      std::printf("modularity: %.6f -> %.6f\n", s.q_seed, s.q_final);
      std::printf("unstable at seed: %zu\nmoves: %zu\n", s.unstable_at_seed,
                  s.moves);
    }
    return 0;
  }

  if (*score) {
    double q = 0.0;
    int eq = 0;
    const nashcd_status st = nashcd_score(
        score_input.c_str(), score_kind,
        score_labels.empty() ? nullptr : score_labels.c_str(),
        score_partition.c_str(), &q, &eq);
    if (st != NASHCD_OK) return report(st);
    std::printf("modularity: %.17g\nnash_equilibrium: %s\n", q,
                eq ? "true" : "false");
    return 0;
  }

  const nashcd_status st = nashcd_write_synthetic_bipartite(
      gen_out.c_str(), gen_u, gen_v, gen_groups, gen_seed);
  return st == NASHCD_OK ? 0 : report(st);
}
