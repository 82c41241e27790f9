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

#ifndef FGC_GENERATOR_HPP_
#define FGC_GENERATOR_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fgc/feasibility.hpp"
#include "fgc/instance.hpp"

namespace fgc {

struct GeneratorParams {
  int n = 6;
  int m = 14;
  double safe_fraction = 0.5;
  double cost_min = 1.0;
  double cost_max = 10.0;
  int p = 1;
  int q = 1;
  std::uint64_t seed = 1;
};

namespace detail {

// Draws are built from raw engine output so instances do not depend on the
// standard library's distribution implementations.
class GeneratorRng {
 public:
  explicit GeneratorRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % bound;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform cost rounded to cents, so files stay short and exact.
  double cost(double lo, double hi) { return std::round((lo + (hi - lo) * unit()) * 100.0) / 100.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// Random connected multigraph instance with exactly `m` sampled edges, each
/// safe with probability safe_fraction. If the full edge set is infeasible,
/// parallel unsafe copies of crossing edges are added on each uncovered cut
/// until it is covered, so the result may have more than m edges.
inline FgcInstance gen_random(const GeneratorParams& params) {
  if (params.n < 2 || params.m < params.n - 1) {
    fail(ErrorCode::kInvalidParameter,
         "cannot build a connected graph with n = " + std::to_string(params.n) + " and m = " +
             std::to_string(params.m));
  }
  if (!(params.safe_fraction >= 0.0 && params.safe_fraction <= 1.0)) {
    fail(ErrorCode::kInvalidParameter, "safe_fraction must lie in [0, 1]");
  }
  if (!(params.cost_min >= 0.0 && params.cost_min <= params.cost_max) || !std::isfinite(params.cost_max)) {
    fail(ErrorCode::kInvalidParameter, "cost range must satisfy 0 <= min <= max");
  }
  if (params.p < 1 || params.q < 0) fail(ErrorCode::kInvalidParameter, "need p >= 1 and q >= 0");

  detail::GeneratorRng rng(params.seed);
  const auto n = static_cast<std::uint64_t>(params.n);
  std::vector<Edge> edges;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 10000) {
      fail(ErrorCode::kInvalidParameter, "no connected sample found; raise m relative to n");
    }
    edges.clear();
    for (int i = 0; i < params.m; ++i) {
      const auto u = static_cast<VertexId>(rng.below(n));
      auto v = static_cast<VertexId>(rng.below(n - 1));
      if (v >= u) ++v;
      edges.push_back(Edge{u, v});
    }
    if (Multigraph(params.n, edges).is_connected()) break;
  }

  FgcInstance inst;
  inst.p = params.p;
  inst.q = params.q;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    inst.kind.push_back(rng.unit() < params.safe_fraction ? EdgeKind::kSafe : EdgeKind::kUnsafe);
    inst.cost.push_back(rng.cost(params.cost_min, params.cost_max));
  }
  inst.graph = Multigraph(params.n, edges);

  for (;;) {
    const FeasibilityVerdict verdict = is_feasible(inst, EdgeSelection::all(inst.edge_count()));
    if (verdict.feasible) break;
    const std::vector<EdgeId> crossing = cut_edges(inst.graph, *verdict.witness);
    const CutTally tally = tally_cut(inst, EdgeSelection::all(inst.edge_count()), *verdict.witness);
    for (int k = tally.total; k < inst.p + inst.q; ++k) {
      const EdgeId source = crossing[rng.below(crossing.size())];
      edges.push_back(inst.graph.edge(source));
      inst.kind.push_back(EdgeKind::kUnsafe);
      inst.cost.push_back(rng.cost(params.cost_min, params.cost_max));
    }
    inst.graph = Multigraph(params.n, edges);
  }
  return inst;
}

}  // namespace fgc

#endif  // FGC_GENERATOR_HPP_
