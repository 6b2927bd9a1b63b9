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

#include <cstdint>
#include <utility>

#include "quadremap/mesh.hpp"

namespace quadremap {

using MeshPair = std::pair<StructuredQuadMesh, StructuredQuadMesh>;

/// alpha(t) = sin(4 pi t) / 2.
double tensor_alpha(double t);

/// Graded tensor-product grid x = (1-a) xi + a xi^3, y = (1-a) eta^2. With
/// `rescale` the y coordinate is divided by (1-a) so every t tiles [0,1]^2.
StructuredQuadMesh tensor_grid(int nx, int ny, double t, bool rescale = true);

/// Old grid at t1 = 1/(320+nx), new grid at t2 = 2 t1.
MeshPair tensor_pair(int nx, int ny, bool rescale = true);

inline constexpr double kOldGamma = 0.4;
inline constexpr double kNewGamma = 0.1;

/// Uniform nx*nx grid on [0,1]^2 with interior vertices moved by gamma*r*h,
/// r uniform in [-0.5, 0.5) and independent per vertex and coordinate.
/// `stream` selects an independent substream of `seed`.
StructuredQuadMesh random_grid(int nx, double gamma, std::uint64_t seed, std::uint32_t stream = 0);

/// Old grid with gamma 0.4 (stream 0), new grid with gamma 0.1 (stream 1).
MeshPair random_pair(int nx, std::uint64_t seed);

}  // namespace quadremap
