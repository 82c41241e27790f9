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

#ifndef FGC_MIN_CUT_HPP_
#define FGC_MIN_CUT_HPP_

#include <limits>
#include <vector>

#include "fgc/graph.hpp"

namespace fgc {

struct MinCutResult {
  Cut cut;
  double value = 0.0;
};

/// Exact global minimum cut by Stoer-Wagner maximum adjacency phases on a
/// dense capacity matrix, O(n^3). Deterministic: ties in the adjacency search
/// go to the smallest vertex id.
///
/// The reported value is recomputed from the returned cut with cut_capacity
/// so it matches what every other routine would compute for that cut.
inline MinCutResult min_cut(const Multigraph& g, const Capacities& caps) {
  if (caps.size() != g.edge_count()) {
    fail(ErrorCode::kContractViolation, "capacity vector size does not match edge count");
  }
  if (!g.is_connected()) {
    fail(ErrorCode::kDisconnected, "min_cut requires a connected graph");
  }
  const int n = g.vertex_count();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> w(un, std::vector<double>(un, 0.0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    w[static_cast<std::size_t>(edge.u)][static_cast<std::size_t>(edge.v)] += caps[e];
    w[static_cast<std::size_t>(edge.v)][static_cast<std::size_t>(edge.u)] += caps[e];
  }

  // members[v] lists the original vertices merged into super-vertex v.
  std::vector<std::vector<VertexId>> members(un);
  for (VertexId v = 0; v < n; ++v) members[static_cast<std::size_t>(v)] = {v};
  std::vector<char> merged(un, 0);

  double best_value = std::numeric_limits<double>::infinity();
  std::vector<VertexId> best_side;

  for (int phase = 0; phase < n - 1; ++phase) {
    std::vector<double> key(un, 0.0);
    std::vector<char> added(un, 0);
    VertexId prev = -1;
    VertexId last = -1;
    const int active = n - phase;
    for (int step = 0; step < active; ++step) {
      VertexId pick = -1;
      for (VertexId v = 0; v < n; ++v) {
        const auto uv = static_cast<std::size_t>(v);
        if (merged[uv] || added[uv]) continue;
        if (pick < 0 || key[uv] > key[static_cast<std::size_t>(pick)]) pick = v;
      }
      if (pick < 0) break;
      added[static_cast<std::size_t>(pick)] = 1;
      prev = last;
      last = pick;
      for (VertexId v = 0; v < n; ++v) {
        const auto uv = static_cast<std::size_t>(v);
        if (!merged[uv] && !added[uv]) key[uv] += w[static_cast<std::size_t>(pick)][uv];
      }
    }
    const auto ul = static_cast<std::size_t>(last);
    const auto up = static_cast<std::size_t>(prev);
    if (key[ul] < best_value) {
      best_value = key[ul];
      best_side = members[ul];
    }
    // Merge `last` into `prev`.
    members[up].insert(members[up].end(), members[ul].begin(), members[ul].end());
    merged[ul] = 1;
    for (std::size_t v = 0; v < un; ++v) {
      w[up][v] += w[ul][v];
      w[v][up] = w[up][v];
    }
    w[up][up] = 0.0;
  }

  Cut cut = Cut::from_side(n, best_side);
  return MinCutResult{cut, cut_capacity(g, caps, cut)};
}

}  // namespace fgc

#endif  // FGC_MIN_CUT_HPP_
