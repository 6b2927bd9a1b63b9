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
#include <vector>

#include "quadremap/mesh.hpp"
#include "quadremap/remap.hpp"

namespace quadremap {

struct SweptPiece {
  Polygon polygon;  // same orientation as the lobe of the loop it came from
  CellIndex old_cell;
  double area = 0.0;  // signed
};

/// Region between an old face and its new position. Vertical faces use the
/// loop Q_{i,j} Q_{i,j+1} P_{i,j+1} P_{i,j}, horizontal faces the loop
/// Q_{i+1,j} Q_{i,j} P_{i,j} P_{i+1,j}; in both cases the signed area is the
/// area gained by the cell below/left of the face and lost by the other one.
struct SweptRegion {
  EdgeIndex edge;
  Polygon loop;
  std::vector<SweptPiece> pieces;
  double signed_area = 0.0;
  int degenerate_lobes = 0;  // zero-width lobes dropped from `pieces`
};

SweptRegion swept_region(const EdgeIndex& e, const StructuredQuadMesh& old_mesh,
                         const StructuredQuadMesh& new_mesh);

/// Area of new cell c from the old area and its four face fluxes.
double cell_area_fb(CellIndex c, const StructuredQuadMesh& old_mesh,
                    const StructuredQuadMesh& new_mesh);

/// Signed mass of the region for per-old-cell densities (row-major order).
double swept_mass(const SweptRegion& r, std::span<const double> densities, int old_M);

RemapResult remap_fb(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh,
                     std::span<const double> old_masses);

/// Every interior face's region, vertical faces first; horizontal faces are
/// reported in original coordinates.
std::vector<SweptRegion> all_swept_regions(const StructuredQuadMesh& old_mesh,
                                           const StructuredQuadMesh& new_mesh);

}  // namespace quadremap
