// Copyright 2026 The conflictnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conflictnet/error.h"

namespace conflictnet {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPreconditionViolation:
      return "PreconditionViolation";
    case ErrorCode::kNonFiniteEvaluation:
      return "NonFiniteEvaluation";
    case ErrorCode::kBracketFailure:
      return "BracketFailure";
    case ErrorCode::kUnknownPlayer:
      return "UnknownPlayer";
    case ErrorCode::kDegenerateBattle:
      return "DegenerateBattle";
    case ErrorCode::kDimensionTooLarge:
      return "DimensionTooLarge";
    case ErrorCode::kUnknownExample:
      return "UnknownExample";
    case ErrorCode::kSchemaError:
      return "SchemaError";
  }
  return "Unknown";
}

}  // namespace conflictnet
