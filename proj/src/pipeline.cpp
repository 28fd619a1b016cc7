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

#include "nashcd/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "nashcd/error.hpp"
#include "nashcd/modularity.hpp"

namespace nashcd {

namespace fs = std::filesystem;

namespace {

class AtomicFile {
 public:
  explicit AtomicFile(fs::path path)
      : path_(std::move(path)), tmp_(path_.string() + ".tmp") {
    out_.open(tmp_, std::ios::binary | std::ios::trunc);
    if (!out_) {
      throw Error(ErrorCode::kIoError, "cannot write '" + tmp_.string() + "'");
    }
  }
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;
  ~AtomicFile() {
    if (!committed_) {
      out_.close();
      std::error_code ec;
      fs::remove(tmp_, ec);
    }
  }

  std::ostream& stream() { return out_; }

  void commit() {
    out_.flush();
    if (!out_) {
      throw Error(ErrorCode::kIoError, "write to '" + tmp_.string() + "' failed");
    }
    out_.close();
    std::error_code ec;
    fs::rename(tmp_, path_, ec);
    if (ec) {
      throw Error(ErrorCode::kIoError, "cannot rename '" + tmp_.string() +
                                           "': " + ec.message());
    }
    committed_ = true;
  }

 private:
  fs::path path_;
  fs::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

// Streams a community x vertex matrix restricted to columns [begin, end).
class MatrixWriter {
 public:
  MatrixWriter(const fs::path& path, const std::vector<std::string>& labels,
               std::size_t begin, std::size_t end, bool zero_is_none)
      : file_(path),
        begin_(begin),
        end_(end),
        zero_is_none_(zero_is_none),
        best_(end - begin, -std::numeric_limits<double>::infinity()),
        arg_(end - begin, kNone) {
    std::ostream& o = file_.stream();
    o << "community";
    for (std::size_t v = begin; v < end; ++v) o << ',' << labels[v];
    o << '\n';
  }

  void row(std::size_t id, std::span<const double> values) {
    std::ostream& o = file_.stream();
    o << id;
    for (std::size_t v = begin_; v < end_; ++v) {
      const double x = values[v];
      o << ',' << format_fixed6(x);
      if (x > best_[v - begin_]) {
        best_[v - begin_] = x;
        arg_[v - begin_] = id;
      }
    }
    o << '\n';
  }

  void finish() {
    std::ostream& o = file_.stream();
    o << "argmax";
    for (std::size_t i = 0; i < arg_.size(); ++i) {
      o << ',';
      if (arg_[i] != kNone && !(zero_is_none_ && best_[i] == 0.0)) o << arg_[i];
    }
    o << '\n';
    file_.commit();
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  AtomicFile file_;
  std::size_t begin_;
  std::size_t end_;
  bool zero_is_none_;
  std::vector<double> best_;
  std::vector<std::size_t> arg_;
};

using RowSource =
    std::function<void(const std::function<void(std::size_t, std::span<const double>)>&)>;

void emit_matrix(const fs::path& dir, const std::string& stem, const Graph& g,
                 const std::vector<std::string>& labels, bool zero_is_none,
                 const RowSource& rows) {
  std::vector<std::unique_ptr<MatrixWriter>> writers;
  if (const auto& layout = g.block_layout()) {
    writers.push_back(std::make_unique<MatrixWriter>(
        dir / (stem + "_u.csv"), labels, 0, layout->u_count, zero_is_none));
    writers.push_back(std::make_unique<MatrixWriter>(
        dir / (stem + "_v.csv"), labels, layout->u_count, g.vertex_count(),
        zero_is_none));
  } else {
    writers.push_back(std::make_unique<MatrixWriter>(
        dir / (stem + ".csv"), labels, 0, g.vertex_count(), zero_is_none));
  }
  rows([&](std::size_t id, std::span<const double> values) {
    for (auto& w : writers) w->row(id, values);
  });
  for (auto& w : writers) w->finish();
}

// Rows are emitted with dense ids: the rank of the community among the live
// ones.
RowSource legitimacy_rows(const Graph& g, const Partition& p,
                          LegitimacyMode mode) {
  return [&g, &p, mode](const auto& sink) {
    std::vector<double> row(g.vertex_count());
    std::size_t id = 0;
    for (CommunityId c : p.live_communities()) {
      legitimacy_row(g, p, c, mode, row);
      sink(id++, row);
    }
  };
}

RowSource rm_rows(const Graph& g, const Partition& p) {
  return [&g, &p](const auto& sink) {
    const std::size_t n = g.vertex_count();
    const auto two_m = static_cast<std::int64_t>(2 * g.edge_count());
    const double scale = rm_scale(g.edge_count());
    std::vector<std::int64_t> base(n);
    for (VertexId v = 0; v < n; ++v) {
      const std::int64_t d = g.degree(v);
      const CommunityId own = p.community_of(v);
      base[v] = -two_m * links_to_community(g, p, v, own) - d * d +
                d * static_cast<std::int64_t>(p.total_degree(own));
    }
    std::vector<std::vector<VertexId>> members(p.community_count());
    for (VertexId v = 0; v < n; ++v) members[p.community_of(v)].push_back(v);
    std::vector<std::int64_t> links(n, 0);
    std::vector<double> row(n);
    std::size_t id = 0;
    for (CommunityId c : p.live_communities()) {
      for (VertexId x : members[c]) {
        for (VertexId y : g.neighbors(x)) ++links[y];
      }
      const auto dc = static_cast<std::int64_t>(p.total_degree(c));
      for (VertexId v = 0; v < n; ++v) {
        if (p.community_of(v) == c) {
          row[v] = 0.0;
        } else {
          const std::int64_t num = base[v] + two_m * links[v] -
                                   static_cast<std::int64_t>(g.degree(v)) * dc;
          row[v] = static_cast<double>(num) * scale;
        }
      }
      for (VertexId x : members[c]) {
        for (VertexId y : g.neighbors(x)) links[y] = 0;
      }
      sink(id++, row);
    }
  };
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_trace(const fs::path& dir, const EquilibriumTrace& trace,
                 const std::vector<std::string>& labels) {
  AtomicFile f(dir / "trace.tsv");
  std::ostream& o = f.stream();
  o << "step\tvertex\tfrom\tto\trm\tq_after\n";
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const Move& m = trace.steps[k];
    o << k + 1 << '\t' << labels[m.vertex] << '\t' << m.from << '\t' << m.to
      << '\t' << format_g17(m.rm) << '\t' << format_g17(m.q_after) << '\n';
  }
  f.commit();
}

void write_partition_file(const fs::path& path, const Partition& p,
                          const std::vector<std::string>& labels) {
  AtomicFile f(path);
  write_partition(f.stream(), p, labels);
  f.commit();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

EmitFlags parse_emit_flags(std::string_view text) {
  EmitFlags f{false, false, false, false, false};
  if (text == "all") return EmitFlags{};
  if (text == "none") return f;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    if (item == "partition") {
      f.partition = true;
    } else if (item == "legitimacy") {
      f.legitimacy = true;
    } else if (item == "rm") {
      f.rm = true;
    } else if (item == "trace") {
      f.trace = true;
    } else if (item == "summary") {
      f.summary = true;
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown output '" + std::string(item) + "'");
    }
    pos = comma + 1;
  }
  return f;
}

std::string format_summary(const RunSummary& s) {
  std::ostringstream o;
  o << "kind: " << to_string(s.kind) << '\n'
    << "vertices: " << s.vertices << '\n'
    << "edges: " << s.edges << '\n'
    << "dropped_self_loops: " << s.dropped_self_loops << '\n'
    << "communities_seed: " << s.communities_seed << '\n'
    << "communities_final: " << s.communities_final << '\n'
    << "modularity_seed: " << format_g17(s.q_seed) << '\n'
    << "modularity_final: " << format_g17(s.q_final) << '\n'
    << "unstable_at_seed: " << s.unstable_at_seed << '\n'
    << "moves: " << s.moves << '\n'
    << "seconds_load: " << format_fixed6(s.seconds_load) << '\n'
    << "seconds_louvain: " << format_fixed6(s.seconds_louvain) << '\n'
    << "seconds_nash: " << format_fixed6(s.seconds_nash) << '\n'
    << "seconds_output: " << format_fixed6(s.seconds_output) << '\n';
  return o.str();
}

std::string format_summary_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(s.kind));
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["dropped_self_loops"] = s.dropped_self_loops;
  j["communities_seed"] = s.communities_seed;
  j["communities_final"] = s.communities_final;
  j["modularity_seed"] = s.q_seed;
  j["modularity_final"] = s.q_final;
  j["unstable_at_seed"] = s.unstable_at_seed;
  j["moves"] = s.moves;
  j["seconds"] = {{"load", s.seconds_load},
                  {"louvain", s.seconds_louvain},
                  {"nash", s.seconds_nash},
                  {"output", s.seconds_output}};
  return j.dump(2) + "\n";
}

RunSummary run(const RunConfig& cfg) {
  using clock = std::chrono::steady_clock;
  RunSummary s;

  auto t0 = clock::now();
  const LoadedGraph loaded = read_graph_file(cfg.input, cfg.kind);
  const Graph& g = loaded.graph;
  const std::vector<std::string> labels =
      cfg.labels ? read_labels(*cfg.labels, loaded) : default_labels(loaded);
  const LegitimacyMode mode =
      cfg.legitimacy_mode.value_or(default_legitimacy_mode(g));
  if (mode == LegitimacyMode::kOpposite && !g.block_layout()) {
    throw Error(ErrorCode::kInvalidArgument,
                "legitimacy mode 'opposite' needs bipartite or directed input");
  }
  s.kind = loaded.kind;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.dropped_self_loops = loaded.dropped_self_loops;
  s.seconds_load = seconds_since(t0);

  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (!fs::is_directory(cfg.out_dir)) {
    throw Error(ErrorCode::kIoError,
                "cannot create output directory '" + cfg.out_dir.string() + "'");
  }

  t0 = clock::now();
  const Partition seed = louvain(g, cfg.louvain);
  s.seconds_louvain = seconds_since(t0);
  s.communities_seed = seed.live_count();
  s.q_seed = g.edge_count() > 0 ? modularity(seed) : 0.0;

  double output_seconds = 0.0;
  t0 = clock::now();
  s.unstable_at_seed = unstable_vertices(g, seed, cfg.nash.epsilon).size();
  if (cfg.emit.partition) {
    write_partition_file(cfg.out_dir / "partition_seed.txt", seed, labels);
  }
  if (cfg.emit.legitimacy) {
    emit_matrix(cfg.out_dir, "legitimacy_seed", g, labels, true,
                legitimacy_rows(g, seed, mode));
  }
  if (cfg.emit.rm) {
    emit_matrix(cfg.out_dir, "rm_seed", g, labels, false, rm_rows(g, seed));
  }
  output_seconds += seconds_since(t0);

  t0 = clock::now();
  NashResult ne;
  try {
    ne = to_nash_equilibrium(g, seed, cfg.nash);
  } catch (const StepCapExceeded& e) {
    if (cfg.emit.trace) write_trace(cfg.out_dir, e.trace(), labels);
    throw;
  }
  s.seconds_nash = seconds_since(t0);
  s.moves = ne.trace.steps.size();
  s.q_final = ne.trace.final_q;

  t0 = clock::now();
  const Partition final_partition = ne.partition.compacted();
  s.communities_final = final_partition.live_count();
  if (cfg.emit.partition) {
    write_partition_file(cfg.out_dir / "partition.txt", final_partition, labels);
  }
  if (cfg.emit.legitimacy) {
    emit_matrix(cfg.out_dir, "legitimacy_ne", g, labels, true,
                legitimacy_rows(g, final_partition, mode));
  }
  if (cfg.emit.rm) {
    emit_matrix(cfg.out_dir, "rm_ne", g, labels, false,
                rm_rows(g, final_partition));
  }
  if (cfg.emit.trace) write_trace(cfg.out_dir, ne.trace, labels);
  output_seconds += seconds_since(t0);
  s.seconds_output = output_seconds;

  if (cfg.emit.summary) {
    AtomicFile f(cfg.out_dir / "summary.txt");
    f.stream() << format_summary(s);
    f.commit();
    if (cfg.summary_json) {
      AtomicFile j(cfg.out_dir / "summary.json");
      j.stream() << format_summary_json(s);
      j.commit();
    }
  }
  return s;
}

}  // namespace nashcd
