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

#include <span>
#include <string_view>
#include <vector>

namespace quadremap {

enum class RemapMethod { kFB, kCIB };

RemapMethod parse_remap_method(std::string_view name);
std::string_view remap_method_name(RemapMethod method);

struct RemapResult {
  RemapMethod method = RemapMethod::kFB;
  std::vector<double> masses;     // new cells, row-major, i fastest
  std::vector<double> densities;  // masses over new cell areas
  double conservation_residual = 0.0;
  long polygon_count = 0;  // swap polygons (CIB) or swept pieces (FB)
  int ns_xx = 0;
  int ns_yy = 0;
  long degeneracy_events = 0;
  double wall_time_ms = 0.0;
};

/// |sum(new) - sum(old)| / |sum(old)|, or the absolute difference when the
/// old total is zero.
double conservation_residual(std::span<const double> old_masses,
                             std::span<const double> new_masses);

}  // namespace quadremap
