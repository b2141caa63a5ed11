// Copyright 2026 The Sponsored Assortment Authors
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

#include "assortment/error.h"

namespace assortment {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kProductNotPlaced:
      return "ProductNotPlaced";
    case ErrorCode::kInvalidPlacement:
      return "InvalidPlacement";
    case ErrorCode::kNoPerfectMatching:
      return "NoPerfectMatching";
    case ErrorCode::kInfeasibleSponsoredAssignment:
      return "InfeasibleSponsoredAssignment";
    case ErrorCode::kConvergenceFailure:
      return "ConvergenceFailure";
    case ErrorCode::kProductNotInSet:
      return "ProductNotInSet";
    case ErrorCode::kGroundSetTooLarge:
      return "GroundSetTooLarge";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kValidationError:
      return "ValidationError";
    case ErrorCode::kConfigError:
      return "ConfigError";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace assortment
