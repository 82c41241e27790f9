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

#ifndef FGC_ROUNDING_HPP_
#define FGC_ROUNDING_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fgc/feasibility.hpp"
#include "fgc/relaxation.hpp"

namespace fgc {

struct RoundingConfig {
  // C in y_e = min(1, C ln(n) x_e).
  double scale_constant = 100.0;
  // Accepted outcomes cost at most multiplier * C * ln(n) * lp_value.
  double cost_cap_multiplier = 2.0;
  int max_attempts = 64;
  std::uint64_t seed = 0;
};

inline void check_config(const RoundingConfig& cfg) {
  if (!(cfg.scale_constant > 0.0) || !std::isfinite(cfg.scale_constant)) {
    fail(ErrorCode::kInvalidParameter, "scale constant must be positive");
  }
  if (!(cfg.cost_cap_multiplier >= 1.0)) {
    fail(ErrorCode::kInvalidParameter, "cost cap multiplier must be at least 1");
  }
  if (cfg.max_attempts < 1) {
    fail(ErrorCode::kInvalidParameter, "max_attempts must be at least 1");
  }
}

/// Random stream for one rounding attempt, a pure function of
/// (seed, attempt) so attempts replay independently.
class AttemptStream {
 public:
  AttemptStream(std::uint64_t seed, int attempt) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(attempt) + 1));
    engine_.seed(splitmix64(state));
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

inline std::vector<double> inclusion_probabilities(const FgcInstance& inst, const FractionalSolution& x,
                                                   const RoundingConfig& cfg) {
  check_config(cfg);
  const double scale = cfg.scale_constant * std::log(static_cast<double>(inst.vertex_count()));
  std::vector<double> y(static_cast<std::size_t>(inst.edge_count()));
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    y[static_cast<std::size_t>(e)] = std::min(1.0, scale * x[e]);
  }
  return y;
}

/// Includes each edge independently with probability y_e. Edges with
/// y_e = 1 are always taken and edges with y_e = 0 never are.
inline EdgeSelection round_once(const FgcInstance& inst, const FractionalSolution& x,
                                const RoundingConfig& cfg, int attempt) {
  const std::vector<double> y = inclusion_probabilities(inst, x, cfg);
  AttemptStream stream(cfg.seed, attempt);
  EdgeSelection f(inst.edge_count());
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const double u = stream.uniform();
    if (u < y[static_cast<std::size_t>(e)]) f.insert(e);
  }
  return f;
}

struct RoundingOutcome {
  EdgeSelection selection;
  double cost = 0.0;
  int attempts_used = 0;
  // Number of edges with y_e = 1.
  int forced_set_size = 0;
  double lp_value = 0.0;
  int lp_iterations = 0;
  EnumerationMode separation_mode = EnumerationMode::kExhaustive;
  EnumerationMode feasibility_mode = EnumerationMode::kExhaustive;
};

inline double cost_cap(const FgcInstance& inst, const RoundingConfig& cfg, double lp_value) {
  return cfg.cost_cap_multiplier * cfg.scale_constant *
         std::log(static_cast<double>(inst.vertex_count())) * lp_value;
}

/// Las Vegas loop over round_once: the first attempt that is feasible and
/// within the cost cap is returned.
inline RoundingOutcome round_solution(const FgcInstance& inst, const FractionalSolution& x, double lp_value,
                                      const RoundingConfig& cfg, const FeasibilityOptions& feasibility = {}) {
  check_config(cfg);
  const std::vector<double> y = inclusion_probabilities(inst, x, cfg);
  const int forced = static_cast<int>(std::count(y.begin(), y.end(), 1.0));
  const double cap = cost_cap(inst, cfg, lp_value);
  std::ostringstream diag;
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    EdgeSelection f = round_once(inst, x, cfg, attempt);
    const double cost = selection_cost(inst, f);
    const bool within_cap = cost <= cap + 1e-9 * std::max(1.0, cap);
    FeasibilityVerdict verdict;
    if (within_cap) verdict = is_feasible(inst, f, feasibility);
    if (within_cap && verdict.feasible) {
      RoundingOutcome out;
      out.selection = std::move(f);
      out.cost = cost;
      out.attempts_used = attempt + 1;
      out.forced_set_size = forced;
      out.lp_value = lp_value;
      out.feasibility_mode = verdict.mode;
      return out;
    }
    diag << " [attempt " << attempt << ": cost " << cost << (within_cap ? "" : " over cap")
         << (within_cap && !verdict.feasible ? " infeasible at " + verdict.witness->to_string() : "") << "]";
  }
  fail(ErrorCode::kRoundingExhausted,
       "all " + std::to_string(cfg.max_attempts) + " rounding attempts rejected (cap " +
           std::to_string(cap) + "):" + diag.str());
}

/// Full pipeline: solve the relaxation once, then round.
inline RoundingOutcome solve(const FgcInstance& inst, const RoundingConfig& cfg = {},
                             const RelaxationOptions& relaxation = {},
                             const FeasibilityOptions& feasibility = {}) {
  check_config(cfg);
  const RelaxationResult lp = solve_relaxation(inst, relaxation);
  RoundingOutcome out = round_solution(inst, lp.x, lp.value, cfg, feasibility);
  out.lp_iterations = lp.iterations;
  out.separation_mode = lp.separation_mode;
  return out;
}

}  // namespace fgc

#endif  // FGC_ROUNDING_HPP_
