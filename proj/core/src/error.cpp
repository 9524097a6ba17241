// Copyright 2026 The smpec Authors
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

#include "smpec/error.hpp"

namespace smpec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kSchemaViolation: return "schema-violation";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kMonotonicityViolation: return "monotonicity-violation";
    case ErrorCode::kUnboundedSet: return "unbounded-set";
    case ErrorCode::kEmptySet: return "empty-set";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kNotInSet: return "x-not-in-set";
    case ErrorCode::kNonConvergence: return "non-convergence";
    case ErrorCode::kInnerNonConvergence: return "inner-non-convergence";
    case ErrorCode::kIterationCap: return "iteration-cap";
    case ErrorCode::kTargetNotInHull: return "target-not-in-hull";
    case ErrorCode::kLowerLevelInfeasible: return "lower-level-infeasible";
    case ErrorCode::kUncertifiedInput: return "uncertified-input";
    case ErrorCode::kUnsupportedSetDimension: return "unsupported-set-dimension";
  }
  return "unknown";
}

}  // namespace smpec
