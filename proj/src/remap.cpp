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

#include "quadremap/remap.hpp"

#include <cmath>
#include <string>

#include "quadremap/error.hpp"

namespace quadremap {

RemapMethod parse_remap_method(std::string_view name) {
  if (name == "fb") return RemapMethod::kFB;
  if (name == "cib") return RemapMethod::kCIB;
  throw RemapError(ErrorCode::kUnknownKind, "unknown method '" + std::string(name) + "'");
}

std::string_view remap_method_name(RemapMethod method) {
  return method == RemapMethod::kFB ? "fb" : "cib";
}

double conservation_residual(std::span<const double> old_masses,
                             std::span<const double> new_masses) {
  double old_total = 0.0;
  double new_total = 0.0;
  for (double m : old_masses) old_total += m;
  for (double m : new_masses) new_total += m;
  const double diff = std::abs(new_total - old_total);
  return old_total == 0.0 ? diff : diff / std::abs(old_total);
}

}  // namespace quadremap
