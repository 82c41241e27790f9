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

#ifndef FGC_EXACT_HPP_
#define FGC_EXACT_HPP_

// Brute-force baselines. Everything here walks all 2^(n-1) - 1 canonical
// cuts directly and shares no enumeration code with the near-min-cut path.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fgc/feasibility.hpp"
#include "fgc/relaxation.hpp"

namespace fgc {

struct ExactOptions {
  int edge_limit = 22;
  int vertex_limit = 20;
};

struct ExactResult {
  EdgeSelection best_selection;
  double best_cost = 0.0;
  long long nodes_explored = 0;
};

namespace detail {

class ExactSearch {
 public:
  explicit ExactSearch(const FgcInstance& inst) : inst_(inst) {
    const int n = inst.vertex_count();
    const int m = inst.edge_count();
    for (std::uint64_t side = 2; side < (std::uint64_t{1} << n); side += 2) {
      std::uint32_t delta = 0;
      std::uint32_t safe = 0;
      for (EdgeId e = 0; e < m; ++e) {
        const Edge& edge = inst.graph.edge(e);
        if (((side >> edge.u) ^ (side >> edge.v)) & 1U) {
          delta |= std::uint32_t{1} << e;
          if (inst.is_safe(e)) safe |= std::uint32_t{1} << e;
        }
      }
      cuts_.push_back({delta, safe});
    }
    order_.resize(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e) order_[static_cast<std::size_t>(e)] = e;
    std::stable_sort(order_.begin(), order_.end(),
                     [&inst](EdgeId a, EdgeId b) { return inst.edge_cost(a) < inst.edge_cost(b); });
  }

  ExactResult run() {
    const std::uint32_t all = inst_.edge_count() == 32 ? ~0U : (1U << inst_.edge_count()) - 1;
    best_cost_ = std::numeric_limits<double>::infinity();
    if (covers(all)) dfs(0, 0, all, 0.0);
    if (!std::isfinite(best_cost_)) {
      fail(ErrorCode::kInfeasibleEdgeSet, "no feasible edge set exists");
    }
    ExactResult out;
    out.best_selection = EdgeSelection::from_ids(inst_.edge_count(), best_ids_);
    out.best_cost = best_cost_;
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  struct CutMasks {
    std::uint32_t delta;
    std::uint32_t safe;
  };

  bool covers(std::uint32_t f) const {
    for (const CutMasks& c : cuts_) {
      if (std::popcount(f & c.safe) >= inst_.p) continue;
      if (std::popcount(f & c.delta) >= inst_.p + inst_.q) continue;
      return false;
    }
    return true;
  }

  static std::vector<EdgeId> ids_of(std::uint32_t f) {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < 32; ++e) {
      if ((f >> e) & 1U) ids.push_back(e);
    }
    return ids;
  }

  void consider(std::uint32_t chosen, double cost) {
    std::vector<EdgeId> ids = ids_of(chosen);
    if (cost < best_cost_ - 1e-9 || (cost <= best_cost_ + 1e-9 && ids < best_ids_)) {
      best_cost_ = cost;
      best_ids_ = std::move(ids);
    }
  }

  // chosen: edges taken so far; possible: chosen plus undecided edges.
  void dfs(std::size_t depth, std::uint32_t chosen, std::uint32_t possible, double cost) {
    ++nodes_;
    if (cost > best_cost_ + 1e-9) return;
    if (depth == order_.size()) {
      consider(chosen, cost);
      return;
    }
    const EdgeId e = order_[depth];
    // Edges are visited by ascending cost, so once `chosen` is feasible only
    // zero-cost additions can tie it.
    if (inst_.edge_cost(e) > 0.0 && covers(chosen)) {
      consider(chosen, cost);
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << e;
    dfs(depth + 1, chosen | bit, possible, cost + inst_.edge_cost(e));
    const std::uint32_t without = possible & ~bit;
    if (covers(without)) dfs(depth + 1, chosen, without, cost);
  }

  const FgcInstance& inst_;
  std::vector<CutMasks> cuts_;
  std::vector<EdgeId> order_;
  double best_cost_ = 0.0;
  std::vector<EdgeId> best_ids_;
  long long nodes_ = 0;
};

inline void require_vertex_limit(int n, int limit) {
  if (n > limit || n > 63) {
    fail(ErrorCode::kTooLarge,
         "instance too large for exhaustive mode: n = " + std::to_string(n) + " exceeds " +
             std::to_string(limit));
  }
}

}  // namespace detail

/// Minimum-cost feasible edge set by branch and bound over edge subsets.
/// Among optimal sets the lexicographically smallest sorted id list wins.
inline ExactResult exact_opt(const FgcInstance& inst, const ExactOptions& options = {}) {
  if (inst.edge_count() > options.edge_limit || inst.edge_count() > 32) {
    fail(ErrorCode::kTooLarge,
         "exact search limited to " + std::to_string(std::min(options.edge_limit, 32)) +
             " edges, instance has " + std::to_string(inst.edge_count()));
  }
  detail::require_vertex_limit(inst.vertex_count(), options.vertex_limit);
  ExactResult out = detail::ExactSearch(inst).run();
  if (!is_feasible_direct(inst, out.best_selection, options.vertex_limit).feasible) {
    fail(ErrorCode::kNumerical, "branch and bound returned an infeasible set");
  }
  return out;
}

struct ScoredRow {
  ConstraintRow row;
  double violation = 0.0;
};

/// Every J_{a,b} row, over every canonical cut, violated by more than eps;
/// sorted by violation, largest first.
inline std::vector<ScoredRow> separate_bruteforce(const FgcInstance& inst, const FractionalSolution& x,
                                                  double epsilon, int vertex_limit = 12) {
  const int n = inst.vertex_count();
  detail::require_vertex_limit(n, vertex_limit);
  std::vector<ScoredRow> out;
  for (std::uint64_t side = 2; side < (std::uint64_t{1} << n); side += 2) {
    const Cut cut = Cut::from_mask(n, side);
    for (CandidateJ& candidate : candidate_j_sets(inst, cut, x)) {
      ConstraintRow row = constraint_row(inst, cut, std::move(candidate.j_edges));
      const double v = violation(row, x);
      if (v > epsilon) out.push_back(ScoredRow{std::move(row), v});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ScoredRow& a, const ScoredRow& b) { return a.violation > b.violation; });
  return out;
}

/// Number of canonical cuts with capacity at most alpha * lambda, where
/// lambda is the minimum over the same exhaustive scan.
inline long long count_cuts_at_most(const Multigraph& g, const Capacities& caps, double alpha,
                                    int vertex_limit = 20) {
  const int n = g.vertex_count();
  detail::require_vertex_limit(n, vertex_limit);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(1) << (n - 1));
  for (std::uint64_t side = 2; side < (std::uint64_t{1} << n); side += 2) {
    double total = 0.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (((side >> edge.u) ^ (side >> edge.v)) & 1U) total += caps[e];
    }
    values.push_back(total);
  }
  const double lambda = *std::min_element(values.begin(), values.end());
  const double limit = alpha * lambda;
  const double slack = 1e-9 * std::max(1.0, std::abs(limit));
  return std::count_if(values.begin(), values.end(), [&](double v) { return v <= limit + slack; });
}

}  // namespace fgc

#endif  // FGC_EXACT_HPP_
