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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadremap/mesh.hpp"

namespace quadremap {

enum class FrameGroup { kShrunk, kShifted, kStretched, kDiagShrunk, kDiagShifted, kDiagStretched };

std::string_view group_name(FrameGroup g);
/// Short form used in swap-region branch paths: sk, st, sh, dsk, dst, dsh.
std::string_view group_abbrev(FrameGroup g);

/// Table lookup from crossing counts; nullopt for impossible combinations.
std::optional<FrameGroup> group_from_counts(int h_count, int v_count);

/// Region number of a quadrant: RU=1, LU=2, LD=3, RD=4.
int region_number(Quadrant q);

/// The 17 labels up to left/right mirroring, and the 34 concrete labels
/// (symmetric label plus "-L" or "-R" for the side of the upper endpoint).
const std::vector<std::string>& symmetric_labels();
const std::vector<std::string>& concrete_labels();

struct FrameHit {
  Point2 point;
  EdgeIndex member;
};

struct EdgeFrameClass {
  EdgeIndex edge;
  int h_count = 0;  // proper crossings with the frame's cross members
  int v_count = 0;  // proper crossings with the frame's parallel members
  std::optional<FrameGroup> group;
  std::string symmetric_label;
  std::string label;
  int a_region = 0;  // upper endpoint Q_{i,j+1} relative to P_{i,j+1}
  int b_region = 0;  // lower endpoint Q_{i,j} relative to P_{i,j}
  Quadrant a_quadrant = Quadrant::kRU;
  Quadrant b_quadrant = Quadrant::kRU;
  std::vector<FrameHit> hits;
  bool degenerate = false;
  std::string reason;
};

/// Classifies new edge e (both endpoints interior) against the old local
/// frame of the same index. Horizontal edges are classified on the
/// transposed meshes and reported with transposed labels. With `strict`,
/// degenerate contacts throw DegenerateEdge instead of setting the flag.
EdgeFrameClass classify_edge_vs_frame(const EdgeIndex& e, const StructuredQuadMesh& old_mesh,
                                      const StructuredQuadMesh& new_mesh, bool strict = false);

/// Where the new horizontal curve through Q_{i,j} meets x_i^a (V1), and the
/// extra frame crossing on the way (V2) when there is one.
struct SwapBoundaryClass {
  int i = 0;
  int j = 0;
  Quadrant quadrant = Quadrant::kRU;
  int region = 0;
  Point2 v1;
  std::optional<Point2> v2;
  int count = 0;  // 1 without V2, 2 with V2
  bool degenerate = false;
  std::string reason;
};

SwapBoundaryClass classify_swap_boundary(int i, int j, const StructuredQuadMesh& old_mesh,
                                         const StructuredQuadMesh& new_mesh, bool strict = false);

struct LocalSwapClass {
  EdgeFrameClass edge_class;
  SwapBoundaryClass upper;  // through Q_{i,j+1}
  SwapBoundaryClass lower;  // through Q_{i,j}
  std::string path;         // e.g. "RU-LD-dst-U1S2"
  bool degenerate = false;
};

LocalSwapClass classify_local_swap(const EdgeIndex& e, const StructuredQuadMesh& old_mesh,
                                   const StructuredQuadMesh& new_mesh);

struct CaseCensus {
  std::map<std::string, long> edge_labels;
  std::map<std::string, long> swap_paths;
  long classified_edges = 0;
  long degenerate_edges = 0;
  long boundary_adjacent_edges = 0;
  long invalid_combinations = 0;
  long degenerate_swap_regions = 0;
};

/// Classifies every new edge with interior endpoints, in both directions.
CaseCensus case_census(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh);

}  // namespace quadremap
