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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadremap {

enum class ErrorCode {
  kDimensionMismatch,
  kNonSimpleCell,
  kOutOfBounds,
  kNonFinite,
  kOutsidePatch,
  kNonConvexInput,
  kInvalidCombination,
  kDegenerateEdge,
  kMissingIntersection,
  kAssumptionViolated,
  kMissingDensity,
  kCollinearCurves,
  kUnknownKind,
  kDegenerateAlpha,
  kInvalidGamma,
  kInvalidConfig,
  kIo,
};

/// Stable machine-readable name, e.g. "NonSimpleCell".
std::string_view error_code_name(ErrorCode code);

class RemapError : public std::runtime_error {
 public:
  RemapError(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quadremap
