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

#ifndef FGC_GRAPH_HPP_
#define FGC_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fgc/error.hpp"

namespace fgc {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with dense vertex ids 0..n-1 and dense edge ids
/// 0..m-1. Parallel edges are allowed, self-loops are not. Connectivity is
/// not enforced here because generators build graphs incrementally; callers
/// that need it use is_connected().
class Multigraph {
 public:
  Multigraph() = default;

  Multigraph(int vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 2) {
      fail(ErrorCode::kInvalidParameter,
           "graph needs at least 2 vertices, got " +
               std::to_string(vertex_count_));
    }
    incident_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (EdgeId e = 0; e < edge_count(); ++e) {
      const Edge& edge = edges_[static_cast<std::size_t>(e)];
      if (edge.u < 0 || edge.u >= vertex_count_ || edge.v < 0 ||
          edge.v >= vertex_count_) {
        fail(ErrorCode::kEdgeOutOfRange,
             "edge " + std::to_string(e) + " has an endpoint outside 0.." +
                 std::to_string(vertex_count_ - 1));
      }
      if (edge.u == edge.v) {
        fail(ErrorCode::kSelfLoop,
             "edge " + std::to_string(e) + " is a self-loop at vertex " +
                 std::to_string(edge.u));
      }
      incident_[static_cast<std::size_t>(edge.u)].push_back(e);
      incident_[static_cast<std::size_t>(edge.v)].push_back(e);
    }
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> incident(VertexId v) const {
    return incident_[static_cast<std::size_t>(v)];
  }

  VertexId other_endpoint(EdgeId e, VertexId v) const {
    const Edge& edge = this->edge(e);
    return edge.u == v ? edge.v : edge.u;
  }

  bool is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::vector<VertexId> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : incident(v)) {
        VertexId w = other_endpoint(e, v);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == vertex_count_;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Nonnegative finite per-edge capacities indexed by edge id.
class Capacities {
 public:
  Capacities() = default;

  explicit Capacities(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t e = 0; e < values_.size(); ++e) {
      if (!std::isfinite(values_[e]) || values_[e] < 0.0) {
        fail(ErrorCode::kInvalidParameter,
             "capacity of edge " + std::to_string(e) +
                 " must be finite and nonnegative");
      }
    }
  }

  static Capacities uniform(int edge_count, double value) {
    return Capacities(std::vector<double>(static_cast<std::size_t>(edge_count), value));
  }

  double operator[](EdgeId e) const { return values_[static_cast<std::size_t>(e)]; }
  int size() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// A nontrivial vertex bipartition, stored as the side that does not contain
/// vertex 0. Both shores of a bipartition map to the same Cut. Sides are kept
/// as packed 64-bit words; graphs with at most 64 vertices use one word.
class Cut {
 public:
  Cut() = default;

  /// Builds the canonical cut whose shores are `side` and its complement.
  static Cut from_side(int vertex_count, std::span<const VertexId> side) {
    Cut cut(vertex_count);
    for (VertexId v : side) {
      if (v < 0 || v >= vertex_count) {
        fail(ErrorCode::kContractViolation,
             "cut vertex " + std::to_string(v) + " out of range");
      }
      cut.words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    }
    cut.canonicalize();
    return cut;
  }

  static Cut from_side(int vertex_count, std::initializer_list<VertexId> side) {
    return from_side(vertex_count, std::span<const VertexId>(side.begin(), side.size()));
  }

  /// Bit v of `side_mask` marks vertex v. Requires vertex_count <= 64.
  static Cut from_mask(int vertex_count, std::uint64_t side_mask) {
    if (vertex_count > 64) {
      fail(ErrorCode::kContractViolation, "from_mask needs at most 64 vertices");
    }
    Cut cut(vertex_count);
    cut.words_[0] = side_mask & full_word(vertex_count);
    cut.canonicalize();
    return cut;
  }

  int vertex_count() const { return vertex_count_; }

  bool contains(VertexId v) const {
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }

  std::vector<VertexId> side() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count_; ++v) {
      if (contains(v)) out.push_back(v);
    }
    return out;
  }

  int side_size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  /// Single-word view, valid when vertex_count <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(vertex_count_);
    for (std::uint64_t w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  friend bool operator==(const Cut& a, const Cut& b) {
    return a.vertex_count_ == b.vertex_count_ && a.words_ == b.words_;
  }

  // Orders cuts by the integer value of their side bitset, which is the
  // canonical iteration order used by exhaustive scans.
  friend bool operator<(const Cut& a, const Cut& b) {
    if (a.vertex_count_ != b.vertex_count_) return a.vertex_count_ < b.vertex_count_;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (VertexId v : side()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  explicit Cut(int vertex_count)
      : vertex_count_(vertex_count),
        words_(static_cast<std::size_t>((vertex_count + 63) / 64), 0) {
    if (vertex_count < 2) {
      fail(ErrorCode::kContractViolation, "cuts need at least 2 vertices");
    }
  }

  static std::uint64_t full_word(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  }

  void canonicalize() {
    if (contains(0)) {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        int bits = std::min(64, vertex_count_ - static_cast<int>(i) * 64);
        words_[i] = ~words_[i] & full_word(bits);
      }
    }
    if (side_size() == 0) {
      fail(ErrorCode::kContractViolation,
           "trivial cut: a side must be nonempty and a proper subset of V");
    }
  }

  int vertex_count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CutHash {
  std::size_t operator()(const Cut& cut) const { return cut.hash(); }
};

/// A cut together with its capacity, as produced by enumerations.
struct WeightedCut {
  Cut cut;
  double capacity = 0.0;
};

inline void require_cut_matches(const Multigraph& g, const Cut& r) {
  if (r.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::kContractViolation,
         "cut is over " + std::to_string(r.vertex_count()) +
             " vertices but the graph has " + std::to_string(g.vertex_count()));
  }
}

/// Edges with exactly one endpoint on the cut side, in ascending id order.
inline std::vector<EdgeId> cut_edges(const Multigraph& g, const Cut& r) {
  require_cut_matches(g, r);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (r.contains(edge.u) != r.contains(edge.v)) out.push_back(e);
  }
  return out;
}

/// Capacity of the cut, summed in ascending edge-id order so that every
/// caller gets the same floating-point value for the same cut.
inline double cut_capacity(const Multigraph& g, const Capacities& caps, const Cut& r) {
  require_cut_matches(g, r);
  double total = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (r.contains(edge.u) != r.contains(edge.v)) total += caps[e];
  }
  return total;
}

}  // namespace fgc

#endif  // FGC_GRAPH_HPP_
