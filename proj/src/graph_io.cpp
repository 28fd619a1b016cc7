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

#include "nashcd/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "nashcd/error.hpp"

namespace nashcd {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T parse_integer(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "invalid " + std::string(what) + " '" +
                               std::string(tok) + "'");
  }
  return value;
}

VertexId parse_id(std::string_view tok, std::size_t line) {
  const auto v = parse_integer<std::uint64_t>(tok, line, "vertex id");
  if (v >= std::numeric_limits<VertexId>::max()) {
    throw ParseError(line, "vertex id " + std::string(tok) + " is too large");
  }
  return static_cast<VertexId>(v);
}

void check_weight(std::string_view tok, std::size_t line) {
  double w = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, w);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "invalid weight '" + std::string(tok) + "'");
  }
  if (w != 1.0) {
    throw ParseError(line, "weight " + std::string(tok) +
                               " is not supported; only binary graphs are");
  }
}

struct Header {
  GraphKind kind = GraphKind::kAuto;
  std::size_t line = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

Header parse_header(const std::vector<std::string_view>& tok, std::size_t line) {
  Header h;
  h.line = line;
  const std::string_view name = tok[0].substr(1);
  std::size_t want = 0;
  if (name == "bipartite") {
    h.kind = GraphKind::kBipartite;
    want = 2;
  } else if (name == "directed") {
    h.kind = GraphKind::kDirected;
    want = 1;
  } else if (name == "unipartite") {
    h.kind = GraphKind::kUnipartite;
    want = 1;
  } else {
    throw ParseError(line, "unknown header '" + std::string(tok[0]) + "'");
  }
  if (tok.size() != want + 1) {
    throw ParseError(line, "header '" + std::string(tok[0]) + "' takes " +
                               std::to_string(want) + " count(s)");
  }
  h.a = parse_integer<std::size_t>(tok[1], line, "count");
  if (want == 2) h.b = parse_integer<std::size_t>(tok[2], line, "count");
  if (h.a >= std::numeric_limits<VertexId>::max() ||
      h.b >= std::numeric_limits<VertexId>::max()) {
    throw ParseError(line, "vertex count too large");
  }
  return h;
}

}  // namespace

std::string_view to_string(GraphKind kind) noexcept {
  switch (kind) {
    case GraphKind::kAuto:
      return "auto";
    case GraphKind::kUnipartite:
      return "unipartite";
    case GraphKind::kBipartite:
      return "bipartite";
    case GraphKind::kDirected:
      return "directed";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view text) noexcept {
  for (GraphKind k : {GraphKind::kAuto, GraphKind::kUnipartite,
                      GraphKind::kBipartite, GraphKind::kDirected}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

LoadedGraph parse_graph(std::istream& in, GraphKind requested) {
  std::optional<Header> header;
  GraphKind kind = requested == GraphKind::kAuto ? GraphKind::kUnipartite
                                                 : requested;
  // Edges are validated as they are read; the header, when present, always
  // comes first.
  std::vector<Edge> edges;
  std::size_t max_u = 0;
  std::size_t max_v = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok[0].front() == '%') {
      if (header) {
        throw ParseError(lineno, "second header line (first on line " +
                                     std::to_string(header->line) + ")");
      }
      if (!edges.empty()) throw ParseError(lineno, "header must precede edges");
      header = parse_header(tok, lineno);
      if (requested != GraphKind::kAuto && requested != header->kind) {
        throw ParseError(lineno, "header declares a " +
                                     std::string(to_string(header->kind)) +
                                     " graph but " +
                                     std::string(to_string(requested)) +
                                     " was requested");
      }
      kind = header->kind;
      continue;
    }
    if (tok.size() < 2 || tok.size() > 3) {
      throw ParseError(lineno, "expected 'i j' or 'i j weight', got " +
                                   std::to_string(tok.size()) + " field(s)");
    }
    const VertexId a = parse_id(tok[0], lineno);
    const VertexId b = parse_id(tok[1], lineno);
    if (tok.size() == 3) check_weight(tok[2], lineno);
    auto pair = [a, b] {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
    };
    switch (kind) {
      case GraphKind::kUnipartite:
        if (a == b) throw ParseError(lineno, "self-loop " + pair() + " is not allowed");
        if (header && (a >= header->a || b >= header->a)) {
          throw ParseError(lineno, "edge " + pair() + " outside [0, " +
                                       std::to_string(header->a) + ")");
        }
        break;
      case GraphKind::kBipartite:
        if (header && (a >= header->a || b >= header->b)) {
          throw ParseError(lineno, "bipartite edge " + pair() + " outside " +
                                       std::to_string(header->a) + " x " +
                                       std::to_string(header->b));
        }
        break;
      case GraphKind::kDirected:
        if (header && (a >= header->a || b >= header->a)) {
          throw ParseError(lineno, "arc " + pair() + " outside [0, " +
                                       std::to_string(header->a) + ")");
        }
        break;
      case GraphKind::kAuto:
        break;
    }
    max_u = std::max<std::size_t>(max_u, a + std::size_t{1});
    max_v = std::max<std::size_t>(max_v, b + std::size_t{1});
    edges.push_back({a, b});
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read error");
  if (!header && edges.empty()) throw ParseError(0, "input contains no edges");

  LoadedGraph out;
  out.kind = kind;
  switch (kind) {
    case GraphKind::kUnipartite:
      out.graph = Graph::from_edges(edges, header ? header->a : 0);
      break;
    case GraphKind::kBipartite:
      out.bipartite = BipartiteGraph::from_edges(
          edges, header ? header->a : max_u, header ? header->b : max_v);
      edges = {};
      out.graph = to_block_unipartite(*out.bipartite);
      break;
    case GraphKind::kDirected: {
      DirectedReduction red = directed_to_bipartite(
          edges, header ? header->a : std::max(max_u, max_v));
      edges = {};
      out.dropped_self_loops = red.dropped_self_loops;
      out.bipartite = std::move(red.graph);
      out.graph = to_block_unipartite(*out.bipartite);
      break;
    }
    case GraphKind::kAuto:
      break;
  }
  return out;
}

LoadedGraph read_graph_file(const std::filesystem::path& path,
                            GraphKind requested) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  }
  return parse_graph(in, requested);
}

std::vector<std::string> default_labels(const LoadedGraph& graph) {
  const std::size_t n = graph.graph.vertex_count();
  std::vector<std::string> out;
  out.reserve(n);
  if (graph.kind == GraphKind::kUnipartite || !graph.bipartite) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
  }
  const std::size_t r = graph.bipartite->u_count();
  const std::size_t s = graph.bipartite->v_count();
  const bool directed = graph.kind == GraphKind::kDirected;
  for (std::size_t i = 0; i < r; ++i) {
    out.push_back(directed ? std::to_string(i) + ":out" : "u" + std::to_string(i));
  }
  for (std::size_t j = 0; j < s; ++j) {
    out.push_back(directed ? std::to_string(j) + ":in" : "v" + std::to_string(j));
  }
  return out;
}

std::vector<std::string> read_labels(const std::filesystem::path& path,
                                     const LoadedGraph& graph) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  }
  std::vector<std::string> labels = default_labels(graph);
  const bool directed = graph.kind == GraphKind::kDirected;
  const std::size_t limit =
      directed ? graph.bipartite->u_count() : graph.graph.vertex_count();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected '<id> <label>'");
    const auto id = parse_integer<std::size_t>(tok[0], lineno, "vertex id");
    if (id >= limit) {
      throw ParseError(lineno, "label for unknown vertex " + std::string(tok[0]));
    }
    if (directed) {
      labels[id] = std::string(tok[1]) + ":out";
      labels[limit + id] = std::string(tok[1]) + ":in";
    } else {
      labels[id] = std::string(tok[1]);
    }
  }
  return labels;
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_partition(std::ostream& out, const Partition& partition,
                     const std::vector<std::string>& labels) {
  if (labels.size() != partition.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "label count does not match");
  }
  for (std::size_t v = 0; v < labels.size(); ++v) {
    out << labels[v] << '\t' << partition.community_of(static_cast<VertexId>(v))
        << '\n';
  }
}

std::vector<CommunityId> read_partition(std::istream& in,
                                        const std::vector<std::string>& labels) {
  std::vector<CommunityId> out;
  out.reserve(labels.size());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(lineno, "expected '<label>\\t<community>'");
    if (out.size() >= labels.size()) throw ParseError(lineno, "more lines than vertices");
    const std::string_view label(line.data(), tab);
    if (label != labels[out.size()]) {
      throw ParseError(lineno, "expected label '" + labels[out.size()] + "', got '" +
                                   std::string(label) + "'");
    }
    std::string_view rest(line);
    rest.remove_prefix(tab + 1);
    while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.remove_suffix(1);
    out.push_back(parse_integer<CommunityId>(rest, lineno, "community id"));
  }
  if (out.size() != labels.size()) {
    throw ParseError(0, "partition lists " + std::to_string(out.size()) +
                            " vertices, expected " + std::to_string(labels.size()));
  }
  return out;
}

}  // namespace nashcd
