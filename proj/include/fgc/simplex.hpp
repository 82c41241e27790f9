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

#ifndef FGC_SIMPLEX_HPP_
#define FGC_SIMPLEX_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fgc/error.hpp"

namespace fgc {

/// One covering row sum_j coef_j * x_j >= rhs, stored sparsely.
template <typename Scalar>
struct SparseRow {
  std::vector<std::pair<int, Scalar>> terms;
  Scalar rhs{};
};

template <typename Scalar>
struct BoxLpSolution {
  std::vector<Scalar> x;
  Scalar value{};
  int pivots = 0;
};

namespace detail {

template <typename Scalar>
Scalar zero_tolerance() {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return Scalar(1e-11);
  } else {
    return Scalar(0);
  }
}

template <typename Scalar>
Scalar magnitude(const Scalar& v) {
  return v < Scalar(0) ? -v : v;
}

// Solves the square system M x = r by Gaussian elimination with partial
// pivoting. M is consumed.
template <typename Scalar>
std::vector<Scalar> solve_square(std::vector<std::vector<Scalar>> mat, std::vector<Scalar> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (magnitude(mat[r][col]) > magnitude(mat[pivot][col])) pivot = r;
    }
    if (mat[pivot][col] == Scalar(0)) {
      fail(ErrorCode::kNumerical, "singular basis while recovering the primal solution");
    }
    std::swap(mat[pivot], mat[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (mat[r][col] == Scalar(0)) continue;
      const Scalar factor = mat[r][col] / mat[col][col];
      for (std::size_t c = col; c < n; ++c) mat[r][c] -= factor * mat[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= mat[i][c] * x[c];
    x[i] = acc / mat[i][i];
  }
  return x;
}

}  // namespace detail

/// Solves  min c.x  s.t.  rows (>=),  0 <= x <= 1  for nonnegative row data
/// and nonnegative costs.
///
/// Runs primal simplex on the dual
///   max b.y - 1.z  s.t.  A^T y - z <= c,  y, z >= 0,
/// whose all-slack basis is feasible because c >= 0. Dantzig pricing with a
/// switch to Bland's rule after a run of degenerate pivots. The primal point
/// is then re-solved from the final basis against the original data, which
/// keeps floating-point row residuals near machine precision.
///
/// Works for double and for exact rational scalar types.
template <typename Scalar>
BoxLpSolution<Scalar> solve_box_covering_lp(std::span<const SparseRow<Scalar>> rows,
                                            std::span<const Scalar> cost, int max_pivots = 200000) {
  const int m = static_cast<int>(cost.size());
  const int k = static_cast<int>(rows.size());
  const int cols = k + 2 * m;
  const Scalar tol = detail::zero_tolerance<Scalar>();
  for (int e = 0; e < m; ++e) {
    if (cost[static_cast<std::size_t>(e)] < Scalar(0)) {
      fail(ErrorCode::kContractViolation, "objective coefficients must be nonnegative");
    }
  }
  for (int r = 0; r < k; ++r) {
    const SparseRow<Scalar>& row = rows[static_cast<std::size_t>(r)];
    if (row.rhs < Scalar(0)) fail(ErrorCode::kContractViolation, "row rhs must be nonnegative");
    for (const auto& [j, a] : row.terms) {
      if (j < 0 || j >= m || a < Scalar(0)) {
        fail(ErrorCode::kContractViolation,
             "row " + std::to_string(r) + " has a bad column or a negative coefficient");
      }
    }
  }

  // Column layout: y_0..y_{k-1}, z_0..z_{m-1}, s_0..s_{m-1}, then rhs.
  const auto width = static_cast<std::size_t>(cols + 1);
  std::vector<std::vector<Scalar>> tab(static_cast<std::size_t>(m), std::vector<Scalar>(width, Scalar(0)));
  std::vector<Scalar> reduced(width, Scalar(0));
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int r = 0; r < k; ++r) {
    const SparseRow<Scalar>& row = rows[static_cast<std::size_t>(r)];
    for (const auto& [j, a] : row.terms) tab[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] += a;
    reduced[static_cast<std::size_t>(r)] = -row.rhs;
  }
  for (int e = 0; e < m; ++e) {
    auto& line = tab[static_cast<std::size_t>(e)];
    line[static_cast<std::size_t>(k + e)] = Scalar(-1);
    line[static_cast<std::size_t>(k + m + e)] = Scalar(1);
    line[static_cast<std::size_t>(cols)] = cost[static_cast<std::size_t>(e)];
    reduced[static_cast<std::size_t>(k + e)] = Scalar(1);
    basis[static_cast<std::size_t>(e)] = k + m + e;
  }

  int pivots = 0;
  int degenerate_run = 0;
  for (;;) {
    const bool bland = degenerate_run > 50;
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (!(reduced[static_cast<std::size_t>(j)] < -tol)) continue;
      if (enter < 0) {
        enter = j;
        if (bland) break;
      } else if (reduced[static_cast<std::size_t>(j)] < reduced[static_cast<std::size_t>(enter)]) {
        enter = j;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Scalar best_ratio{};
    for (int i = 0; i < m; ++i) {
      const Scalar& a = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (!(a > tol)) continue;
      const Scalar ratio = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      fail(ErrorCode::kNumerical,
           "covering LP is infeasible (dual unbounded) with " + std::to_string(k) + " rows");
    }
    if (++pivots > max_pivots) {
      fail(ErrorCode::kNumerical,
           "simplex exceeded " + std::to_string(max_pivots) + " pivots on " + std::to_string(k) +
               " rows");
    }
    degenerate_run = (best_ratio <= tol) ? degenerate_run + 1 : 0;

    auto& prow = tab[static_cast<std::size_t>(leave)];
    const Scalar pivot = prow[static_cast<std::size_t>(enter)];
    for (auto& v : prow) v /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      auto& line = tab[static_cast<std::size_t>(i)];
      const Scalar factor = line[static_cast<std::size_t>(enter)];
      if (factor == Scalar(0)) continue;
      for (std::size_t c = 0; c < width; ++c) line[c] -= factor * prow[c];
    }
    const Scalar factor = reduced[static_cast<std::size_t>(enter)];
    for (std::size_t c = 0; c < width; ++c) reduced[c] -= factor * prow[c];
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  // Each basic dual column fixes one primal equation: y_r basic makes row r
  // tight, z_e basic sets x_e = 1, s_e basic sets x_e = 0.
  std::vector<std::vector<Scalar>> mat(static_cast<std::size_t>(m), std::vector<Scalar>(static_cast<std::size_t>(m), Scalar(0)));
  std::vector<Scalar> rhs(static_cast<std::size_t>(m), Scalar(0));
  for (int i = 0; i < m; ++i) {
    const int var = basis[static_cast<std::size_t>(i)];
    auto& line = mat[static_cast<std::size_t>(i)];
    if (var < k) {
      for (const auto& [j, a] : rows[static_cast<std::size_t>(var)].terms) line[static_cast<std::size_t>(j)] += a;
      rhs[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(var)].rhs;
    } else if (var < k + m) {
      line[static_cast<std::size_t>(var - k)] = Scalar(1);
      rhs[static_cast<std::size_t>(i)] = Scalar(1);
    } else {
      line[static_cast<std::size_t>(var - k - m)] = Scalar(1);
    }
  }
  BoxLpSolution<Scalar> out;
  out.x = m == 0 ? std::vector<Scalar>{} : detail::solve_square(std::move(mat), std::move(rhs));
  out.pivots = pivots;
  if constexpr (std::is_floating_point_v<Scalar>) {
    for (Scalar& v : out.x) {
      if (std::abs(v) < 1e-12) v = 0;
      if (std::abs(v - 1) < 1e-12) v = 1;
      v = std::min<Scalar>(1, std::max<Scalar>(0, v));
    }
  }
  out.value = Scalar(0);
  for (int e = 0; e < m; ++e) out.value += cost[static_cast<std::size_t>(e)] * out.x[static_cast<std::size_t>(e)];
  return out;
}

}  // namespace fgc

#endif  // FGC_SIMPLEX_HPP_
