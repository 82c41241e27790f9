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

#ifndef FGC_CUT_ENUMERATION_HPP_
#define FGC_CUT_ENUMERATION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "fgc/graph.hpp"
#include "fgc/min_cut.hpp"

namespace fgc {

enum class EnumerationMode { kExhaustive, kContraction };

inline const char* to_string(EnumerationMode mode) {
  return mode == EnumerationMode::kExhaustive ? "exhaustive" : "contraction";
}

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::kExhaustive;
  // Largest vertex count accepted by exhaustive mode.
  int exhaustive_limit = 20;
  // Contraction mode: probability of missing some cut below the threshold.
  double fail_probability = 1e-6;
  // K in the repetition count ceil(K * n^(2 alpha) * ln(n / delta)).
  double repetition_constant = 2.0;
  // Largest threshold / min-cut ratio accepted in contraction mode.
  double alpha_max = 4.0;
  std::uint64_t max_runs = 200'000'000;
  std::uint64_t seed = 0x5eed;
};

/// Relative tolerance applied to every threshold comparison on capacities.
inline constexpr double kCapacityRelTol = 1e-9;

inline double capacity_slack(double threshold) {
  return kCapacityRelTol * std::max(1.0, std::abs(threshold));
}

/// capacity < threshold, with values within the relative tolerance of the
/// threshold treated as equal to it (and therefore not below).
inline bool below_threshold(double capacity, double threshold) {
  return capacity < threshold - capacity_slack(threshold);
}

namespace detail {

inline void sort_cuts(std::vector<WeightedCut>& cuts) {
  std::sort(cuts.begin(), cuts.end(), [](const WeightedCut& a, const WeightedCut& b) {
    if (a.capacity != b.capacity) return a.capacity < b.capacity;
    return a.cut < b.cut;
  });
}

// Capacity of the cut whose side is the vertex bitmask `side`, summed in
// edge-id order (identical to cut_capacity on the same cut).
inline double mask_capacity(const Multigraph& g, const Capacities& caps, std::uint64_t side) {
  double total = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (((side >> edge.u) ^ (side >> edge.v)) & 1U) total += caps[e];
  }
  return total;
}

inline std::vector<WeightedCut> enumerate_exhaustive(const Multigraph& g,
                                                     const Capacities& caps,
                                                     double threshold,
                                                     int exhaustive_limit) {
  const int n = g.vertex_count();
  if (n > exhaustive_limit || n > 63) {
    fail(ErrorCode::kTooLarge,
         "instance too large for exhaustive mode: n = " + std::to_string(n) +
             " exceeds the limit " + std::to_string(std::min(exhaustive_limit, 63)));
  }
  std::vector<WeightedCut> out;
  // Gray-code walk over subsets of {1..n-1}; the running capacity only
  // screens candidates, which are then re-summed exactly.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  const double screen = threshold + 1e-6 * std::max(1.0, std::abs(threshold));
  std::uint64_t side = 0;
  double running = 0.0;
  for (std::uint64_t i = 1; i < count; ++i) {
    const int vertex = std::countr_zero(i) + 1;
    const bool was_in = (side >> vertex) & 1U;
    for (EdgeId e : g.incident(vertex)) {
      const VertexId w = g.other_endpoint(e, vertex);
      const bool w_in = (side >> w) & 1U;
      running += (w_in == was_in) ? caps[e] : -caps[e];
    }
    side ^= std::uint64_t{1} << vertex;
    if (running < screen) {
      const double exact = mask_capacity(g, caps, side);
      if (below_threshold(exact, threshold)) {
        out.push_back(WeightedCut{Cut::from_mask(n, side), exact});
      }
    }
  }
  sort_cuts(out);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

inline std::vector<WeightedCut> enumerate_contraction(const Multigraph& g,
                                                      const Capacities& caps,
                                                      double threshold,
                                                      const EnumerationOptions& options) {
  const int n = g.vertex_count();
  const double lambda = min_cut(g, caps).value;
  if (!(lambda > 0.0)) {
    fail(ErrorCode::kContractViolation,
         "contraction mode needs a positive minimum cut");
  }
  if (!below_threshold(lambda, threshold)) return {};
  const double alpha = std::max(1.0, threshold / lambda);
  if (alpha > options.alpha_max) {
    fail(ErrorCode::kTooLarge,
         "threshold is " + std::to_string(alpha) +
             " times the minimum cut, above alpha_max = " +
             std::to_string(options.alpha_max));
  }
  if (!(options.fail_probability > 0.0 && options.fail_probability < 1.0)) {
    fail(ErrorCode::kInvalidParameter, "fail_probability must lie in (0, 1)");
  }

  // Contracting down to ceil(2 alpha) super-vertices keeps any fixed cut of
  // capacity <= alpha * lambda with probability at least n^(-2 alpha).
  const int base = std::min(n, std::max(2, static_cast<int>(std::ceil(2.0 * alpha - 1e-12))));
  if (base > 30) {
    fail(ErrorCode::kTooLarge, "contraction base size above 30 super-vertices");
  }
  const double runs_real = std::ceil(options.repetition_constant *
                                     std::pow(static_cast<double>(n), 2.0 * alpha) *
                                     std::log(static_cast<double>(n) / options.fail_probability));
  if (base < n && runs_real > static_cast<double>(options.max_runs)) {
    fail(ErrorCode::kTooLarge,
         "contraction enumeration would need " + std::to_string(runs_real) + " runs");
  }
  const std::uint64_t runs = base == n ? 1 : static_cast<std::uint64_t>(runs_real);

  std::mt19937_64 rng(options.seed);
  std::vector<std::pair<double, EdgeId>> order;
  order.reserve(static_cast<std::size_t>(g.edge_count()));
  std::unordered_set<Cut, CutHash> tested;
  std::vector<WeightedCut> out;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<double> cross;
  const double screen = threshold + 1e-6 * std::max(1.0, std::abs(threshold));

  for (std::uint64_t run = 0; run < runs; ++run) {
    // Exponential clocks with rate equal to capacity: contracting edges in
    // clock order picks each next edge with probability proportional to its
    // capacity among the edges still crossing distinct super-vertices.
    order.clear();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (caps[e] <= 0.0) continue;
      const double u = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
      order.emplace_back(-std::log(u) / caps[e], e);
    }
    std::sort(order.begin(), order.end());
    UnionFind uf(n);
    int components = n;
    for (const auto& [clock, e] : order) {
      if (components <= base) break;
      if (uf.unite(g.edge(e).u, g.edge(e).v)) --components;
    }

    std::fill(label.begin(), label.end(), -1);
    std::vector<int> root_label(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (VertexId v = 0; v < n; ++v) {
      int root = uf.find(v);
      if (root_label[static_cast<std::size_t>(root)] < 0) {
        root_label[static_cast<std::size_t>(root)] = next++;
      }
      label[static_cast<std::size_t>(v)] = root_label[static_cast<std::size_t>(root)];
    }
    const int k = next;
    cross.assign(static_cast<std::size_t>(k * k), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      int a = label[static_cast<std::size_t>(g.edge(e).u)];
      int b = label[static_cast<std::size_t>(g.edge(e).v)];
      if (a == b) continue;
      cross[static_cast<std::size_t>(a * k + b)] += caps[e];
      cross[static_cast<std::size_t>(b * k + a)] += caps[e];
    }
    // Super-vertex 0 holds vertex 0 and stays off the canonical side.
    for (std::uint32_t sub = 2; sub < (1U << k); sub += 2) {
      double approx = 0.0;
      for (int a = 0; a < k; ++a) {
        if (!((sub >> a) & 1U)) continue;
        for (int b = 0; b < k; ++b) {
          if (!((sub >> b) & 1U)) approx += cross[static_cast<std::size_t>(a * k + b)];
        }
      }
      if (approx >= screen) continue;
      std::vector<VertexId> side;
      for (VertexId v = 0; v < n; ++v) {
        if ((sub >> label[static_cast<std::size_t>(v)]) & 1U) side.push_back(v);
      }
      Cut cut = Cut::from_side(n, side);
      if (!tested.insert(cut).second) continue;
      const double exact = cut_capacity(g, caps, cut);
      if (below_threshold(exact, threshold)) out.push_back(WeightedCut{cut, exact});
    }
  }
  sort_cuts(out);
  return out;
}

}  // namespace detail

/// All canonical nontrivial cuts with capacity below `threshold`, sorted by
/// capacity and then by side bitset.
///
/// Exhaustive mode is exact and refuses graphs above the configured vertex
/// limit. Contraction mode repeats randomized capacity-weighted contraction
/// and returns a duplicate-free list that contains every such cut with
/// probability at least 1 - fail_probability; it needs a positive minimum cut
/// and threshold / lambda <= alpha_max.
inline std::vector<WeightedCut> enumerate_cuts_below(const Multigraph& g,
                                                     const Capacities& caps,
                                                     double threshold,
                                                     const EnumerationOptions& options = {}) {
  if (!(threshold > 0.0)) {
    fail(ErrorCode::kContractViolation, "threshold must be positive");
  }
  if (caps.size() != g.edge_count()) {
    fail(ErrorCode::kContractViolation, "capacity vector size does not match edge count");
  }
  if (options.mode == EnumerationMode::kExhaustive) {
    return detail::enumerate_exhaustive(g, caps, threshold, options.exhaustive_limit);
  }
  return detail::enumerate_contraction(g, caps, threshold, options);
}

}  // namespace fgc

#endif  // FGC_CUT_ENUMERATION_HPP_
