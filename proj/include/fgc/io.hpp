// Copyright 2026 The fgc Authors
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

#ifndef FGC_IO_HPP_
#define FGC_IO_HPP_

// Instance files.
//
// Line format (.fgc and anything not ending in .json):
//
//   fgc 1
//   p <int>
//   q <int>
//   nodes <int>
//   edge <u> <v> <S|U> <cost>     (zero or more, 0-based vertices)
//
// '#' starts a comment. The JSON form carries the same fields:
//   {"format": "fgc", "version": 1, "p": .., "q": .., "nodes": ..,
//    "edges": [{"u": .., "v": .., "kind": "S", "cost": ..}, ...]}

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fgc/feasibility.hpp"
#include "fgc/instance.hpp"
#include "json.hpp"

namespace fgc {

namespace detail {

inline std::string line_prefix(int line) { return "line " + std::to_string(line) + ": "; }

inline std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view token, int line, std::string_view what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    fail(ErrorCode::kRange, line_prefix(line) + std::string(what) + " out of range");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorCode::kSyntax, line_prefix(line) + "expected an integer " + std::string(what) +
                                 ", got '" + std::string(token) + "'");
  }
  return value;
}

inline double parse_real(std::string_view token, int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorCode::kSyntax, line_prefix(line) + "expected a decimal cost, got '" + std::string(token) + "'");
  }
  return value;
}

inline std::string format_real(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

struct RawEdge {
  long long u;
  long long v;
  EdgeKind kind;
  double cost;
  int line;
};

// Range checks shared by both formats, then structural construction.
inline FgcInstance build_instance(long long p, long long q, long long nodes, const std::vector<RawEdge>& edges,
                                  bool validate) {
  if (p < 1 || p > 1000000) fail(ErrorCode::kRange, "p must be a positive integer, got " + std::to_string(p));
  if (q < 0 || q > 1000000) fail(ErrorCode::kRange, "q must be a nonnegative integer, got " + std::to_string(q));
  if (nodes < 2 || nodes > 1000000) {
    fail(ErrorCode::kRange, "nodes must be at least 2, got " + std::to_string(nodes));
  }
  FgcInstance inst;
  std::vector<Edge> graph_edges;
  for (const RawEdge& raw : edges) {
    const std::string where = raw.line > 0 ? line_prefix(raw.line) : "edge " + std::to_string(graph_edges.size()) + ": ";
    if (raw.u < 0 || raw.u >= nodes || raw.v < 0 || raw.v >= nodes) {
      fail(ErrorCode::kRange, where + "vertex index outside 0.." + std::to_string(nodes - 1));
    }
    if (raw.u == raw.v) fail(ErrorCode::kSelfLoop, where + "self-loop at vertex " + std::to_string(raw.u));
    if (!std::isfinite(raw.cost) || raw.cost < 0.0) {
      fail(ErrorCode::kRange, where + "cost must be finite and nonnegative");
    }
    graph_edges.push_back(Edge{static_cast<VertexId>(raw.u), static_cast<VertexId>(raw.v)});
    inst.kind.push_back(raw.kind);
    inst.cost.push_back(raw.cost);
  }
  inst.graph = Multigraph(static_cast<int>(nodes), std::move(graph_edges));
  inst.p = static_cast<int>(p);
  inst.q = static_cast<int>(q);
  if (validate) validate_instance(inst);
  return inst;
}

}  // namespace detail

/// Parses the line format. Syntax problems raise kSyntax with the line
/// number, out-of-range values kRange, self-loops kSelfLoop; with `validate`
/// the instance invariants are checked as well.
inline FgcInstance parse_instance(std::string_view text, bool validate = true) {
  std::optional<long long> p;
  std::optional<long long> q;
  std::optional<long long> nodes;
  std::vector<detail::RawEdge> edges;
  bool header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<std::string_view> tok = detail::split_ws(line);
    if (tok.empty()) continue;
    const std::string where = detail::line_prefix(line_no);
    if (!header) {
      if (tok.size() != 2 || tok[0] != "fgc" || tok[1] != "1") {
        fail(ErrorCode::kSyntax, where + "expected header 'fgc 1'");
      }
      header = true;
      continue;
    }
    auto scalar = [&](std::optional<long long>& slot, std::string_view key) {
      if (tok.size() != 2) fail(ErrorCode::kSyntax, where + "'" + std::string(key) + "' takes one integer");
      if (slot) fail(ErrorCode::kSyntax, where + "duplicate '" + std::string(key) + "'");
      slot = detail::parse_int(tok[1], line_no, key);
    };
    if (tok[0] == "p") {
      scalar(p, "p");
    } else if (tok[0] == "q") {
      scalar(q, "q");
    } else if (tok[0] == "nodes") {
      scalar(nodes, "nodes");
    } else if (tok[0] == "edge") {
      if (tok.size() != 5) fail(ErrorCode::kSyntax, where + "expected 'edge <u> <v> <S|U> <cost>'");
      detail::RawEdge raw{};
      raw.u = detail::parse_int(tok[1], line_no, "vertex");
      raw.v = detail::parse_int(tok[2], line_no, "vertex");
      if (tok[3] == "S") {
        raw.kind = EdgeKind::kSafe;
      } else if (tok[3] == "U") {
        raw.kind = EdgeKind::kUnsafe;
      } else {
        fail(ErrorCode::kSyntax, where + "edge kind must be S or U, got '" + std::string(tok[3]) + "'");
      }
      raw.cost = detail::parse_real(tok[4], line_no);
      raw.line = line_no;
      edges.push_back(raw);
    } else {
      fail(ErrorCode::kSyntax, where + "unknown key '" + std::string(tok[0]) + "'");
    }
  }
  if (!header) fail(ErrorCode::kSyntax, "missing header 'fgc 1'");
  if (!p) fail(ErrorCode::kSyntax, "missing key 'p'");
  if (!q) fail(ErrorCode::kSyntax, "missing key 'q'");
  if (!nodes) fail(ErrorCode::kSyntax, "missing key 'nodes'");
  return detail::build_instance(*p, *q, *nodes, edges, validate);
}

/// Canonical line-format text; parse_instance(serialize_instance(i)) == i.
inline std::string serialize_instance(const FgcInstance& inst) {
  std::ostringstream out;
  out << "fgc 1\n"
      << "p " << inst.p << "\n"
      << "q " << inst.q << "\n"
      << "nodes " << inst.vertex_count() << "\n";
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const Edge& edge = inst.graph.edge(e);
    out << "edge " << edge.u << " " << edge.v << " " << (inst.is_safe(e) ? "S" : "U") << " "
        << detail::format_real(inst.edge_cost(e)) << "\n";
  }
  return out.str();
}

inline nlohmann::json instance_to_json(const FgcInstance& inst) {
  nlohmann::json edges = nlohmann::json::array();
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const Edge& edge = inst.graph.edge(e);
    edges.push_back({{"u", edge.u}, {"v", edge.v}, {"kind", inst.is_safe(e) ? "S" : "U"}, {"cost", inst.edge_cost(e)}});
  }
  return {{"format", "fgc"}, {"version", 1}, {"p", inst.p}, {"q", inst.q}, {"nodes", inst.vertex_count()},
          {"edges", std::move(edges)}};
}

inline FgcInstance parse_instance_json(std::string_view text, bool validate = true) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    fail(ErrorCode::kSyntax, std::string("invalid JSON: ") + err.what());
  }
  auto require_int = [&doc](const char* key) -> long long {
    if (!doc.is_object() || !doc.contains(key)) fail(ErrorCode::kSyntax, std::string("missing key '") + key + "'");
    if (!doc[key].is_number_integer()) fail(ErrorCode::kSyntax, std::string("'") + key + "' must be an integer");
    return doc[key].get<long long>();
  };
  if (!doc.is_object() || doc.value("format", "") != "fgc" || doc.value("version", 0) != 1) {
    fail(ErrorCode::kSyntax, "expected \"format\": \"fgc\" and \"version\": 1");
  }
  const long long p = require_int("p");
  const long long q = require_int("q");
  const long long nodes = require_int("nodes");
  std::vector<detail::RawEdge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail(ErrorCode::kSyntax, "'edges' must be an array");
    for (const nlohmann::json& item : doc["edges"]) {
      if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("kind") ||
          !item.contains("cost") || !item["u"].is_number_integer() || !item["v"].is_number_integer() ||
          !item["cost"].is_number() || !item["kind"].is_string()) {
        fail(ErrorCode::kSyntax, "edge " + std::to_string(edges.size()) + " needs integer u, v, kind S|U, numeric cost");
      }
      const std::string kind = item["kind"].get<std::string>();
      if (kind != "S" && kind != "U") fail(ErrorCode::kSyntax, "edge kind must be S or U");
      edges.push_back(detail::RawEdge{item["u"].get<long long>(), item["v"].get<long long>(),
                                      kind == "S" ? EdgeKind::kSafe : EdgeKind::kUnsafe,
                                      item["cost"].get<double>(), 0});
    }
  }
  return detail::build_instance(p, q, nodes, edges, validate);
}

inline bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

inline FgcInstance load_instance(const std::string& path, bool validate = true) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kSyntax, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return is_json_path(path) ? parse_instance_json(buffer.str(), validate) : parse_instance(buffer.str(), validate);
}

inline void save_instance(const std::string& path, const FgcInstance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kRange, "cannot write '" + path + "'");
  out << (is_json_path(path) ? instance_to_json(inst).dump(2) + "\n" : serialize_instance(inst));
}

}  // namespace fgc

#endif  // FGC_IO_HPP_
