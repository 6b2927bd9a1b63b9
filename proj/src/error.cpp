// Copyright 2026 The quadremap Authors
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

#include "quadremap/error.hpp"

namespace quadremap {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonSimpleCell: return "NonSimpleCell";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kOutsidePatch: return "OutsidePatch";
    case ErrorCode::kNonConvexInput: return "NonConvexInput";
    case ErrorCode::kInvalidCombination: return "InvalidCombination";
    case ErrorCode::kDegenerateEdge: return "DegenerateEdge";
    case ErrorCode::kMissingIntersection: return "MissingIntersection";
    case ErrorCode::kAssumptionViolated: return "AssumptionViolated";
    case ErrorCode::kMissingDensity: return "MissingDensity";
    case ErrorCode::kCollinearCurves: return "CollinearCurves";
    case ErrorCode::kUnknownKind: return "UnknownKind";
    case ErrorCode::kDegenerateAlpha: return "DegenerateAlpha";
    case ErrorCode::kInvalidGamma: return "InvalidGamma";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace quadremap
