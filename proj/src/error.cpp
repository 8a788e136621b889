// Copyright 2026 The Authors.
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

#include "propcon/error.hpp"

namespace propcon {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse-error";
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kDuplicateId:
      return "duplicate-id";
    case ErrorCode::kUnknownCandidate:
      return "unknown-candidate";
    case ErrorCode::kUnknownVoter:
      return "unknown-voter";
    case ErrorCode::kNonMonotone:
      return "non-monotone";
    case ErrorCode::kUnsatisfiableQuotas:
      return "unsatisfiable-quotas";
    case ErrorCode::kOverlappingGroups:
      return "overlapping-groups";
    case ErrorCode::kUnsatisfiableClauses:
      return "unsatisfiable-clauses";
    case ErrorCode::kInfeasibleOutcome:
      return "infeasible-outcome";
    case ErrorCode::kNotAMatroid:
      return "not-a-matroid";
    case ErrorCode::kEnumerationCapExceeded:
      return "enumeration-cap-exceeded";
    case ErrorCode::kNTooSmall:
      return "n-too-small";
    case ErrorCode::kInvalidWitness:
      return "invalid-witness";
    case ErrorCode::kBadN:
      return "bad-n";
    case ErrorCode::kUnknownFixture:
      return "unknown-fixture";
    case ErrorCode::kSearchExhausted:
      return "search-exhausted";
  }
  return "unknown-error";
}

}  // namespace propcon
