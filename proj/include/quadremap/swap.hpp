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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "quadremap/mesh.hpp"
#include "quadremap/remap.hpp"

namespace quadremap {

/// One connected piece of T^b_{owner_new} intersected with T^a_{owner_old},
/// owner_new != owner_old. The piece belongs to the invading set of the new
/// cell and to the occupied set of the old cell.
struct SwapPolygon {
  Polygon polygon;  // counterclockwise
  CellIndex owner_old;
  CellIndex owner_new;
  double area = 0.0;  // > 0
};

enum class SwapKind { kInvading, kOccupied };
std::string_view swap_kind_name(SwapKind kind);

struct SwapSweep {
  std::vector<SwapPolygon> polygons;
  long degeneracy_events = 0;        // zero-area chunks that were dropped
  std::vector<int> vertical_strips;  // pieces per strip x_i, i = 2..M-1
  std::vector<int> horizontal_strips;  // pieces per strip y_j before thinning
};

SwapSweep sweep_swap_regions(const StructuredQuadMesh& old_mesh,
                             const StructuredQuadMesh& new_mesh);

struct SingularPoint {
  EdgeFamily family;  // kVertical: x_i^a meets x_i^b; kHorizontal: y_j^a meets y_j^b
  int curve = 0;
  Point2 point;
};

struct SingularPointCensus {
  int ns_xx = 0;
  int ns_yy = 0;
  std::vector<SingularPoint> points;
};

/// Throws CollinearCurves when corresponding curves overlap along a segment.
SingularPointCensus count_singular_points(const StructuredQuadMesh& old_mesh,
                                          const StructuredQuadMesh& new_mesh);

struct CellSwapSummary {
  double invading_area = 0.0;
  double occupied_area = 0.0;
  std::map<CellIndex, double> invading_by_old;  // I^b_c split by old cell
  std::map<CellIndex, double> occupied_by_new;  // O^a_c split by new cell
};

CellSwapSummary invading_occupied(CellIndex c, std::span<const SwapPolygon> polygons);

/// Summaries for every cell in one pass, row-major.
std::vector<CellSwapSummary> invading_occupied_all(const StructuredQuadMesh& mesh,
                                                   std::span<const SwapPolygon> polygons);

/// FA_{c->(k,s)} = mu(I_c within old cell (k,s)) - mu(O_c within new cell (k,s)).
std::map<CellIndex, double> generalized_flux(CellIndex c, std::span<const SwapPolygon> polygons);

RemapResult remap_cib(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh,
                      std::span<const double> old_masses);

long swap_polygon_count(int M, int N, int ns_xx, int ns_yy);

struct CensusCheck {
  bool applicable = false;  // counting hypotheses hold
  long enumerated = 0;
  long expected = 0;
  bool count_matches = false;
  int ns_xx = 0;
  int ns_yy = 0;
  std::vector<int> strip_counts;    // vertical strips
  std::vector<int> strip_expected;  // 2(N-1)-1 plus singular points in that strip
  bool strips_match = false;
  std::string note;
};

CensusCheck census_check(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh);

/// CSV with header i_new,j_new,i_old,j_old,kind,area,vertices; two rows per
/// polygon (invading and occupied).
void write_swap_polygons_csv(std::ostream& os, std::span<const SwapPolygon> polygons);

}  // namespace quadremap
