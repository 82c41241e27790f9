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

#ifndef FGC_INSTANCE_HPP_
#define FGC_INSTANCE_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fgc/graph.hpp"

namespace fgc {

enum class EdgeKind : std::uint8_t { kSafe, kUnsafe };

/// A (p,q)-flexible graph connectivity instance: pick edges so that the
/// chosen subgraph stays p-edge-connected after any q unsafe edges fail.
///
/// Plain aggregate; validate_instance() checks every invariant.
struct FgcInstance {
  Multigraph graph;
  std::vector<EdgeKind> kind;
  std::vector<double> cost;
  int p = 1;
  int q = 0;

  int vertex_count() const { return graph.vertex_count(); }
  int edge_count() const { return graph.edge_count(); }
  bool is_safe(EdgeId e) const { return kind[static_cast<std::size_t>(e)] == EdgeKind::kSafe; }
  double edge_cost(EdgeId e) const { return cost[static_cast<std::size_t>(e)]; }

  friend bool operator==(const FgcInstance&, const FgcInstance&) = default;
};

/// A subset F of the instance's edges; parallel copies are distinct edges.
class EdgeSelection {
 public:
  EdgeSelection() = default;
  explicit EdgeSelection(int edge_count) : in_(static_cast<std::size_t>(edge_count), 0) {}

  static EdgeSelection all(int edge_count) {
    EdgeSelection s(edge_count);
    std::fill(s.in_.begin(), s.in_.end(), 1);
    return s;
  }

  static EdgeSelection from_ids(int edge_count, std::span<const EdgeId> ids) {
    EdgeSelection s(edge_count);
    for (EdgeId e : ids) s.insert(e);
    return s;
  }

  static EdgeSelection from_ids(int edge_count, std::initializer_list<EdgeId> ids) {
    return from_ids(edge_count, std::span<const EdgeId>(ids.begin(), ids.size()));
  }

  int size() const { return static_cast<int>(in_.size()); }

  bool contains(EdgeId e) const { return in_[static_cast<std::size_t>(e)] != 0; }

  void insert(EdgeId e) {
    check(e);
    in_[static_cast<std::size_t>(e)] = 1;
  }

  void erase(EdgeId e) {
    check(e);
    in_[static_cast<std::size_t>(e)] = 0;
  }

  int count() const {
    int total = 0;
    for (char c : in_) total += c != 0;
    return total;
  }

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < size(); ++e) {
      if (contains(e)) out.push_back(e);
    }
    return out;
  }

  bool is_subset_of(const EdgeSelection& other) const {
    for (EdgeId e = 0; e < size(); ++e) {
      if (contains(e) && !other.contains(e)) return false;
    }
    return true;
  }

  friend bool operator==(const EdgeSelection&, const EdgeSelection&) = default;

 private:
  void check(EdgeId e) const {
    if (e < 0 || e >= size()) {
      fail(ErrorCode::kEdgeOutOfRange,
           "edge id " + std::to_string(e) + " outside 0.." + std::to_string(size() - 1));
    }
  }

  std::vector<char> in_;
};

inline double selection_cost(const FgcInstance& inst, const EdgeSelection& f) {
  double total = 0.0;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (f.contains(e)) total += inst.edge_cost(e);
  }
  return total;
}

/// Safe and total counts of selected edges crossing a cut.
struct CutTally {
  int safe = 0;
  int total = 0;
};

inline CutTally tally_cut(const FgcInstance& inst, const EdgeSelection& f, const Cut& r) {
  CutTally tally;
  for (EdgeId e : cut_edges(inst.graph, r)) {
    if (!f.contains(e)) continue;
    ++tally.total;
    if (inst.is_safe(e)) ++tally.safe;
  }
  return tally;
}

/// A cut is covered when it carries p safe edges or p+q edges of any kind.
inline bool cut_covered(const FgcInstance& inst, CutTally tally) {
  return tally.safe >= inst.p || tally.total >= inst.p + inst.q;
}

}  // namespace fgc

#endif  // FGC_INSTANCE_HPP_
