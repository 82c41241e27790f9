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

#ifndef FGC_ERROR_HPP_
#define FGC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgc {

enum class ErrorCode {
  kContractViolation,
  kInvalidParameter,
  kSelfLoop,
  kEdgeOutOfRange,
  kNegativeCost,
  kDisconnected,
  kInfeasibleEdgeSet,
  kTooLarge,
  kSyntax,
  kRange,
  kNumerical,
  kIterationLimit,
  kRoundingExhausted,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kContractViolation: return "contract_violation";
    case ErrorCode::kInvalidParameter: return "invalid_parameter";
    case ErrorCode::kSelfLoop: return "self_loop";
    case ErrorCode::kEdgeOutOfRange: return "edge_out_of_range";
    case ErrorCode::kNegativeCost: return "negative_cost";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kInfeasibleEdgeSet: return "infeasible_edge_set";
    case ErrorCode::kTooLarge: return "too_large";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kRange: return "range";
    case ErrorCode::kNumerical: return "numerical";
    case ErrorCode::kIterationLimit: return "iteration_limit";
    case ErrorCode::kRoundingExhausted: return "rounding_exhausted";
  }
  return "unknown";
}

// Every failure in the library surfaces as an FgcError carrying a code the
// CLI maps onto its exit status.
class FgcError : public std::runtime_error {
 public:
  FgcError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw FgcError(code, message);
}

}  // namespace fgc

#endif  // FGC_ERROR_HPP_
