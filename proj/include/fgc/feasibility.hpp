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

#ifndef FGC_FEASIBILITY_HPP_
#define FGC_FEASIBILITY_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgc/cut_enumeration.hpp"
#include "fgc/instance.hpp"
#include "fgc/min_cut.hpp"

namespace fgc {

struct FeasibilityVerdict {
  bool feasible = true;
  // Present iff infeasible: a cut with fewer than p safe and fewer than p+q
  // selected edges.
  std::optional<Cut> witness;
  EnumerationMode mode = EnumerationMode::kExhaustive;
};

enum class CheckMode { kAuto, kExhaustive, kContraction };

struct FeasibilityOptions {
  CheckMode mode = CheckMode::kAuto;
  int exhaustive_limit = 20;
  // One-sided error of contraction mode: "feasible" may be wrong with at most
  // this probability.
  double fail_probability = 1e-9;
  std::uint64_t seed = 0xfeed;
};

namespace detail {

inline void check_selection_shape(const FgcInstance& inst, const EdgeSelection& f) {
  if (f.size() != inst.edge_count()) {
    fail(ErrorCode::kContractViolation,
         "selection covers " + std::to_string(f.size()) + " edges, instance has " +
             std::to_string(inst.edge_count()));
  }
}

}  // namespace detail

/// Checks every canonical nontrivial cut in increasing side-bitset order.
/// The witness is the first uncovered cut in that order.
inline FeasibilityVerdict is_feasible_direct(const FgcInstance& inst, const EdgeSelection& f,
                                             int exhaustive_limit = 20) {
  detail::check_selection_shape(inst, f);
  const int n = inst.vertex_count();
  if (n > exhaustive_limit || n > 63) {
    fail(ErrorCode::kTooLarge,
         "instance too large for exhaustive mode: n = " + std::to_string(n));
  }
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 1; m < count; ++m) {
    const std::uint64_t side = m << 1;
    CutTally tally;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      if (!f.contains(e)) continue;
      const Edge& edge = inst.graph.edge(e);
      if (((side >> edge.u) ^ (side >> edge.v)) & 1U) {
        ++tally.total;
        if (inst.is_safe(e)) ++tally.safe;
      }
    }
    if (!cut_covered(inst, tally)) {
      return FeasibilityVerdict{false, Cut::from_mask(n, side), EnumerationMode::kExhaustive};
    }
  }
  return FeasibilityVerdict{true, std::nullopt, EnumerationMode::kExhaustive};
}

/// Capacities of the Cap-k-ECSS view of F: p+q on selected safe edges, p on
/// selected unsafe edges, zero on unselected edges.
inline Capacities selection_capacities(const FgcInstance& inst, const EdgeSelection& f) {
  std::vector<double> caps(static_cast<std::size_t>(inst.edge_count()), 0.0);
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (f.contains(e)) {
      caps[static_cast<std::size_t>(e)] = inst.is_safe(e) ? inst.p + inst.q : inst.p;
    }
  }
  return Capacities(std::move(caps));
}

/// Largest capacity, in the view above, of a cut with at most p-1 safe and
/// at most p+q-1 selected edges: p(p+q-1) + q(p-1).
inline long long max_violating_capacity(int p, int q) {
  const long long lp = p;
  const long long lq = q;
  return lp * (lp + lq - 1) + lq * (lp - 1);
}

/// Feasibility through the capacitated view: a cut below k = p(p+q) is
/// uncovered; otherwise only cuts of capacity at most p(p+q-1) + q(p-1) can
/// be uncovered, and those are enumerated and checked directly.
///
/// In contraction mode a "feasible" answer is wrong with probability at most
/// options.fail_probability; "infeasible" answers always carry a checked
/// witness.
inline FeasibilityVerdict is_feasible(const FgcInstance& inst, const EdgeSelection& f,
                                      const FeasibilityOptions& options = {}) {
  detail::check_selection_shape(inst, f);
  const int n = inst.vertex_count();
  EnumerationMode mode = EnumerationMode::kExhaustive;
  if (options.mode == CheckMode::kContraction ||
      (options.mode == CheckMode::kAuto && n > options.exhaustive_limit)) {
    mode = EnumerationMode::kContraction;
  }

  const Capacities caps = selection_capacities(inst, f);
  const MinCutResult lowest = min_cut(inst.graph, caps);
  const double k = static_cast<double>(inst.p) * (inst.p + inst.q);
  // Capacities are integers here, so half-unit margins are exact.
  if (lowest.value < k - 0.5) {
    return FeasibilityVerdict{false, lowest.cut, mode};
  }

  EnumerationOptions enumeration;
  enumeration.mode = mode;
  enumeration.exhaustive_limit = options.exhaustive_limit;
  enumeration.fail_probability = options.fail_probability;
  enumeration.seed = options.seed;
  const double threshold = static_cast<double>(max_violating_capacity(inst.p, inst.q)) + 0.5;
  for (const WeightedCut& wc : enumerate_cuts_below(inst.graph, caps, threshold, enumeration)) {
    if (!cut_covered(inst, tally_cut(inst, f, wc.cut))) {
      return FeasibilityVerdict{false, wc.cut, mode};
    }
  }
  return FeasibilityVerdict{true, std::nullopt, mode};
}

/// Throws FgcError with a distinct code for each violated instance
/// invariant; returns normally when the instance is usable.
inline void validate_instance(const FgcInstance& inst, const FeasibilityOptions& options = {}) {
  if (inst.p < 1) {
    fail(ErrorCode::kInvalidParameter, "p must be at least 1, got " + std::to_string(inst.p));
  }
  if (inst.q < 0) {
    fail(ErrorCode::kInvalidParameter, "q must be nonnegative, got " + std::to_string(inst.q));
  }
  const auto m = static_cast<std::size_t>(inst.edge_count());
  if (inst.kind.size() != m || inst.cost.size() != m) {
    fail(ErrorCode::kContractViolation, "edge labels and costs must cover every edge");
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (!std::isfinite(inst.cost[e]) || inst.cost[e] < 0.0) {
      fail(ErrorCode::kNegativeCost,
           "cost of edge " + std::to_string(e) + " must be finite and nonnegative");
    }
  }
  if (!inst.graph.is_connected()) {
    fail(ErrorCode::kDisconnected, "graph is not connected");
  }
  const FeasibilityVerdict verdict = is_feasible(inst, EdgeSelection::all(inst.edge_count()), options);
  if (!verdict.feasible) {
    fail(ErrorCode::kInfeasibleEdgeSet,
         "the full edge set is infeasible: cut " + verdict.witness->to_string() +
             " lacks p safe and p+q total edges");
  }
}

}  // namespace fgc

#endif  // FGC_FEASIBILITY_HPP_
