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

#ifndef FGC_RELAXATION_HPP_
#define FGC_RELAXATION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fgc/cut_enumeration.hpp"
#include "fgc/feasibility.hpp"
#include "fgc/instance.hpp"
#include "fgc/min_cut.hpp"
#include "fgc/simplex.hpp"

namespace fgc {

/// A point of the box [0,1]^E.
class FractionalSolution {
 public:
  FractionalSolution() = default;

  explicit FractionalSolution(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t e = 0; e < values_.size(); ++e) {
      if (!(values_[e] >= 0.0 && values_[e] <= 1.0)) {
        fail(ErrorCode::kContractViolation,
             "x of edge " + std::to_string(e) + " lies outside [0, 1]");
      }
    }
  }

  static FractionalSolution constant(int edge_count, double value) {
    return FractionalSolution(std::vector<double>(static_cast<std::size_t>(edge_count), value));
  }

  static FractionalSolution indicator(const EdgeSelection& f) {
    std::vector<double> values(static_cast<std::size_t>(f.size()), 0.0);
    for (EdgeId e = 0; e < f.size(); ++e) values[static_cast<std::size_t>(e)] = f.contains(e) ? 1.0 : 0.0;
    return FractionalSolution(std::move(values));
  }

  double operator[](EdgeId e) const { return values_[static_cast<std::size_t>(e)]; }
  int size() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }

  EdgeSelection support() const {
    EdgeSelection f(size());
    for (EdgeId e = 0; e < size(); ++e) {
      if (values_[static_cast<std::size_t>(e)] > 0.0) f.insert(e);
    }
    return f;
  }

  bool is_integral() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0 || v == 1.0; });
  }

 private:
  std::vector<double> values_;
};

/// Capacities u_x(e) = (p + q [e safe]) x_e of the graph H_x.
inline Capacities capacities(const FgcInstance& inst, const FractionalSolution& x) {
  std::vector<double> out(static_cast<std::size_t>(inst.edge_count()));
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const int weight = inst.is_safe(e) ? inst.p + inst.q : inst.p;
    out[static_cast<std::size_t>(e)] = weight * x[e];
  }
  return Capacities(std::move(out));
}

/// The knapsack-cover row for cut R and a partial selection J of delta(R):
///
///   (p-a)+ x(K) + (q-b)+ x(K cap S)  >=  (p-a)+ (p+q-a-b)+
///
/// with a = |J cap S|, b = |J cap U| and K = delta(R) \ J. After grouping,
/// safe edges of K carry alpha1 + alpha2 and unsafe edges of K carry alpha1.
struct ConstraintRow {
  Cut cut;
  std::vector<EdgeId> j_edges;
  int a = 0;
  int b = 0;
  long long alpha1 = 0;
  long long alpha2 = 0;
  long long rhs = 0;
  // (edge, coefficient) for the edges of K, ascending by edge id.
  std::vector<std::pair<EdgeId, long long>> terms;

  bool trivial() const { return rhs == 0; }

  /// Left-hand side at a 0/1 point, in exact integer arithmetic.
  long long lhs(const EdgeSelection& f) const {
    long long total = 0;
    for (const auto& [e, coef] : terms) {
      if (f.contains(e)) total += coef;
    }
    return total;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "R=" << cut.to_string() << " J={";
    for (std::size_t i = 0; i < j_edges.size(); ++i) out << (i ? "," : "") << j_edges[i];
    out << "} a=" << a << " b=" << b << " rhs=" << rhs;
    return out.str();
  }

  friend bool same_constraint(const ConstraintRow& x, const ConstraintRow& y) {
    return x.cut == y.cut && x.j_edges == y.j_edges;
  }
};

inline ConstraintRow constraint_row(const FgcInstance& inst, const Cut& r,
                                    std::vector<EdgeId> j_edges) {
  const std::vector<EdgeId> delta = cut_edges(inst.graph, r);
  std::sort(j_edges.begin(), j_edges.end());
  if (std::adjacent_find(j_edges.begin(), j_edges.end()) != j_edges.end()) {
    fail(ErrorCode::kContractViolation, "J lists an edge twice");
  }
  if (!std::includes(delta.begin(), delta.end(), j_edges.begin(), j_edges.end())) {
    fail(ErrorCode::kContractViolation, "J must be a subset of delta(R)");
  }
  ConstraintRow row;
  row.cut = r;
  for (EdgeId e : j_edges) (inst.is_safe(e) ? row.a : row.b) += 1;
  row.j_edges = std::move(j_edges);
  const long long p = inst.p;
  const long long q = inst.q;
  row.alpha1 = std::max(0LL, p - row.a);
  row.alpha2 = std::max(0LL, q - row.b);
  row.rhs = row.alpha1 * std::max(0LL, p + q - row.a - row.b);
  for (EdgeId e : delta) {
    if (std::binary_search(row.j_edges.begin(), row.j_edges.end(), e)) continue;
    const long long coef = inst.is_safe(e) ? row.alpha1 + row.alpha2 : row.alpha1;
    if (coef != 0) row.terms.emplace_back(e, coef);
  }
  return row;
}

/// rhs - lhs(x); positive means violated. Summed in ascending edge order.
inline double violation(const ConstraintRow& row, const FractionalSolution& x) {
  double lhs = 0.0;
  for (const auto& [e, coef] : row.terms) lhs += static_cast<double>(coef) * x[e];
  return static_cast<double>(row.rhs) - lhs;
}

struct CandidateJ {
  int a = 0;
  int b = 0;
  std::vector<EdgeId> j_edges;
};

/// The J_{a,b} family for cut R: the a largest-x safe and b largest-x unsafe
/// edges of delta(R) (ties by ascending edge id), for a <= min(p-1, |L_s|)
/// and b <= min(p+q-1, |L_u|). Ordered by a, then b.
inline std::vector<CandidateJ> candidate_j_sets(const FgcInstance& inst, const Cut& r,
                                                const FractionalSolution& x) {
  std::vector<EdgeId> safe;
  std::vector<EdgeId> unsafe;
  for (EdgeId e : cut_edges(inst.graph, r)) (inst.is_safe(e) ? safe : unsafe).push_back(e);
  auto by_x_desc = [&x](EdgeId lhs, EdgeId rhs) {
    if (x[lhs] != x[rhs]) return x[lhs] > x[rhs];
    return lhs < rhs;
  };
  std::sort(safe.begin(), safe.end(), by_x_desc);
  std::sort(unsafe.begin(), unsafe.end(), by_x_desc);
  const int a_max = std::min(inst.p - 1, static_cast<int>(safe.size()));
  const int b_max = std::min(inst.p + inst.q - 1, static_cast<int>(unsafe.size()));
  std::vector<CandidateJ> out;
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b <= b_max; ++b) {
      CandidateJ c{a, b, {}};
      c.j_edges.assign(safe.begin(), safe.begin() + a);
      c.j_edges.insert(c.j_edges.end(), unsafe.begin(), unsafe.begin() + b);
      std::sort(c.j_edges.begin(), c.j_edges.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

enum class SeparationMode { kAuto, kExhaustive, kContraction };

struct SeparationOptions {
  // Rows count as violated only beyond this absolute amount.
  double epsilon = 1e-7;
  SeparationMode mode = SeparationMode::kAuto;
  int exhaustive_limit = 20;
  double fail_probability = 1e-9;
  double alpha_max = 4.0;
  std::uint64_t seed = 0x5e9a;
  // When false only J = {} rows are separated (the plain cut-covering LP).
  bool knapsack_cover = true;
};

namespace detail {

inline EnumerationMode resolve_mode(const FgcInstance& inst, const SeparationOptions& options) {
  if (options.mode == SeparationMode::kExhaustive) return EnumerationMode::kExhaustive;
  if (options.mode == SeparationMode::kContraction) return EnumerationMode::kContraction;
  return inst.vertex_count() <= options.exhaustive_limit ? EnumerationMode::kExhaustive
                                                         : EnumerationMode::kContraction;
}

}  // namespace detail

/// Separation over every (R, J) pair.
///
/// (i) If the minimum cut lambda of H_x is below p(p+q)(1 - eps), the J = {}
/// row of that cut is violated. (ii) Only cuts with u_x below 2p(p+q) can
/// carry a violated row, and on each such cut the J_{a,b} family contains a
/// row of maximum violation. The row of largest violation over those cuts is
/// returned if it exceeds eps; otherwise no row anywhere is violated by more
/// than eps.
///
/// When (i) fires in contraction mode and 2p(p+q)/lambda exceeds alpha_max,
/// the near-minimum cuts cannot be listed and the min-cut row is returned
/// as is.
inline std::optional<ConstraintRow> separate(const FgcInstance& inst, const FractionalSolution& x,
                                             const SeparationOptions& options = {}) {
  if (x.size() != inst.edge_count()) {
    fail(ErrorCode::kContractViolation, "x does not match the instance edge count");
  }
  const EnumerationMode mode = detail::resolve_mode(inst, options);
  const Capacities caps = capacities(inst, x);
  const MinCutResult lowest = min_cut(inst.graph, caps);
  const double k = static_cast<double>(inst.p) * (inst.p + inst.q);
  const double threshold = 2.0 * k;

  std::optional<ConstraintRow> fallback;
  if (lowest.value < k * (1.0 - options.epsilon)) {
    fallback = constraint_row(inst, lowest.cut, {});
    if (mode == EnumerationMode::kContraction &&
        (lowest.value <= 0.0 || threshold / lowest.value > options.alpha_max)) {
      return fallback;
    }
  }

  EnumerationOptions enumeration;
  enumeration.mode = mode;
  enumeration.exhaustive_limit = options.exhaustive_limit;
  enumeration.fail_probability = options.fail_probability;
  enumeration.alpha_max = options.alpha_max;
  enumeration.seed = options.seed;

  std::optional<ConstraintRow> best;
  double best_violation = options.epsilon;
  for (const WeightedCut& wc : enumerate_cuts_below(inst.graph, caps, threshold, enumeration)) {
    for (CandidateJ& candidate : candidate_j_sets(inst, wc.cut, x)) {
      if (!options.knapsack_cover && !candidate.j_edges.empty()) continue;
      ConstraintRow row = constraint_row(inst, wc.cut, std::move(candidate.j_edges));
      if (row.trivial()) continue;
      const double v = violation(row, x);
      if (v > best_violation) {
        best_violation = v;
        best = std::move(row);
      }
    }
  }
  if (!best) return fallback;
  return best;
}

template <typename Scalar>
std::vector<SparseRow<Scalar>> to_sparse_rows(std::span<const ConstraintRow> rows) {
  std::vector<SparseRow<Scalar>> out;
  for (const ConstraintRow& row : rows) {
    if (row.trivial()) continue;
    SparseRow<Scalar> sparse;
    for (const auto& [e, coef] : row.terms) sparse.terms.emplace_back(e, Scalar(coef));
    sparse.rhs = Scalar(row.rhs);
    out.push_back(std::move(sparse));
  }
  return out;
}

struct LpSolution {
  FractionalSolution x;
  double value = 0.0;
  int pivots = 0;
};

/// Primal feasibility tolerance of lp_solve, per row.
inline constexpr double kRowFeasibilityTol = 1e-9;

/// Optimal point of  min c.x  over the given rows and the box [0,1]^m.
/// Trivial rows are ignored.
inline LpSolution lp_solve(std::span<const ConstraintRow> rows, std::span<const double> objective,
                           int edge_count) {
  if (static_cast<int>(objective.size()) != edge_count) {
    fail(ErrorCode::kContractViolation, "objective size does not match edge count");
  }
  const std::vector<SparseRow<double>> sparse = to_sparse_rows<double>(rows);
  BoxLpSolution<double> solved;
  try {
    solved = solve_box_covering_lp<double>(sparse, objective);
  } catch (const FgcError& err) {
    std::string diag = std::string(err.what()) + "; rows:";
    for (const ConstraintRow& row : rows) diag += " [" + row.to_string() + "]";
    fail(err.code(), diag);
  }
  FractionalSolution x(std::move(solved.x));
  for (const ConstraintRow& row : rows) {
    if (row.trivial()) continue;
    if (violation(row, x) > kRowFeasibilityTol) {
      fail(ErrorCode::kNumerical,
           "LP solution violates row " + row.to_string() + " by " + std::to_string(violation(row, x)));
    }
  }
  return LpSolution{std::move(x), solved.value, solved.pivots};
}

struct RelaxationOptions {
  SeparationOptions separation;
  // Zero selects the default cap of 10 * m * n iterations.
  int max_iterations = 0;
  bool record_iterates = false;
};

struct RelaxationResult {
  FractionalSolution x;
  double value = 0.0;
  std::vector<ConstraintRow> active_rows;
  int iterations = 0;
  EnumerationMode separation_mode = EnumerationMode::kExhaustive;
  // LP optima visited before the final one; filled when requested.
  std::vector<FractionalSolution> iterates;
};

/// Cutting-plane solve of the knapsack-cover relaxation. Starts from the
/// J = {} rows of all singleton cuts and adds the most violated row per
/// round until separation certifies the LP point.
inline RelaxationResult solve_relaxation(const FgcInstance& inst, const RelaxationOptions& options = {}) {
  const int n = inst.vertex_count();
  const int m = inst.edge_count();
  const int cap = options.max_iterations > 0 ? options.max_iterations : 10 * m * n;

  RelaxationResult result;
  result.separation_mode = detail::resolve_mode(inst, options.separation);
  for (VertexId v = 0; v < n; ++v) {
    ConstraintRow row = constraint_row(inst, Cut::from_side(n, {v}), {});
    bool duplicate = std::any_of(result.active_rows.begin(), result.active_rows.end(),
                                 [&row](const ConstraintRow& other) { return same_constraint(row, other); });
    if (!duplicate) result.active_rows.push_back(std::move(row));
  }

  for (int iteration = 1; iteration <= cap; ++iteration) {
    LpSolution lp = lp_solve(result.active_rows, inst.cost, m);
    result.iterations = iteration;
    std::optional<ConstraintRow> cut = separate(inst, lp.x, options.separation);
    if (!cut) {
      result.x = std::move(lp.x);
      result.value = lp.value;
      return result;
    }
    for (const ConstraintRow& row : result.active_rows) {
      if (same_constraint(row, *cut)) {
        fail(ErrorCode::kNumerical,
             "separation returned row " + cut->to_string() + " that is already active");
      }
    }
    if (options.record_iterates) result.iterates.push_back(lp.x);
    result.active_rows.push_back(std::move(*cut));
  }
  fail(ErrorCode::kIterationLimit,
       "cutting-plane loop hit " + std::to_string(cap) + " iterations with " +
           std::to_string(result.active_rows.size()) + " active rows");
}

}  // namespace fgc

#endif  // FGC_RELAXATION_HPP_
