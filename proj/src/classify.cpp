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

#include "quadremap/classify.hpp"

#include "quadremap/error.hpp"

namespace quadremap {

std::string_view group_name(FrameGroup g) {
  switch (g) {
    case FrameGroup::kShrunk: return "shrunk";
    case FrameGroup::kShifted: return "shifted";
    case FrameGroup::kStretched: return "stretched";
    case FrameGroup::kDiagShrunk: return "diagonally shrunk";
    case FrameGroup::kDiagShifted: return "diagonally shifted";
    case FrameGroup::kDiagStretched: return "diagonally stretched";
  }
  return "?";
}

std::string_view group_abbrev(FrameGroup g) {
  switch (g) {
    case FrameGroup::kShrunk: return "sk";
    case FrameGroup::kShifted: return "st";
    case FrameGroup::kStretched: return "sh";
    case FrameGroup::kDiagShrunk: return "dsk";
    case FrameGroup::kDiagShifted: return "dst";
    case FrameGroup::kDiagStretched: return "dsh";
  }
  return "?";
}

std::optional<FrameGroup> group_from_counts(int h, int v) {
  static const std::optional<FrameGroup> table[4][3] = {
      // H0                        H1                        H2
      {FrameGroup::kShrunk, FrameGroup::kShifted, FrameGroup::kStretched},              // V0
      {FrameGroup::kDiagShrunk, FrameGroup::kDiagShifted, FrameGroup::kDiagStretched},  // V1
      {std::nullopt, FrameGroup::kShifted, FrameGroup::kStretched},                     // V2
      {std::nullopt, std::nullopt, FrameGroup::kDiagStretched},                         // V3
  };
  if (h < 0 || h > 2 || v < 0 || v > 3) return std::nullopt;
  return table[v][h];
}

int region_number(Quadrant q) {
  switch (q) {
    case Quadrant::kRU: return 1;
    case Quadrant::kLU: return 2;
    case Quadrant::kLD: return 3;
    case Quadrant::kRD: return 4;
  }
  return 0;
}

const std::vector<std::string>& symmetric_labels() {
  static const std::vector<std::string> labels = {
      "H0V0",   "H0V1",   "H1V0U",  "H1V0D", "H1V2A", "H1V2B", "H1V1AU", "H1V1AD", "H1V1BU",
      "H1V1BD", "H2V0",   "H2V2A",  "H2V2B", "H2V1A", "H2V1B", "H2V1C",  "H2V3"};
  return labels;
}

const std::vector<std::string>& concrete_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& s : symmetric_labels()) {
      out.push_back(s + "-L");
      out.push_back(s + "-R");
    }
    return out;
  }();
  return labels;
}

namespace {

bool is_up(Quadrant q) { return q == Quadrant::kRU || q == Quadrant::kLU; }
bool is_right(Quadrant q) { return q == Quadrant::kRU || q == Quadrant::kRD; }

Point2 swap_xy(Point2 p) { return {p.y, p.x}; }

EdgeIndex transpose_index(const EdgeIndex& e) {
  return {e.family == EdgeFamily::kVertical ? EdgeFamily::kHorizontal : EdgeFamily::kVertical, e.j,
          e.i};
}

void mark_degenerate(bool& flag, std::string& reason, const std::string& why) {
  if (!flag) reason = why;
  flag = true;
}

EdgeFrameClass classify_vertical(int i, int j, const StructuredQuadMesh& old_mesh,
                                 const StructuredQuadMesh& new_mesh, bool strict) {
  const EdgeIndex e{EdgeFamily::kVertical, i, j};
  if (i < 2 || i > old_mesh.M() - 1 || j < 2 || j + 1 > old_mesh.N() - 1) {
    throw RemapError(ErrorCode::kOutOfBounds, "edge " + to_string(e) + " touches the boundary");
  }
  EdgeFrameClass out;
  out.edge = e;
  const Point2 top = new_mesh.vertex(i, j + 1);
  const Point2 bottom = new_mesh.vertex(i, j);
  const VertexAssignment a = assign_vertex(top, old_mesh, i, j + 1);
  const VertexAssignment b = assign_vertex(bottom, old_mesh, i, j);
  out.a_quadrant = a.quadrant;
  out.b_quadrant = b.quadrant;
  out.a_region = region_number(a.quadrant);
  out.b_region = region_number(b.quadrant);
  if (a.on_boundary || b.on_boundary) {
    mark_degenerate(out.degenerate, out.reason, "endpoint on an old edge");
  }

  const Segment seg{bottom, top};
  const LocalFrame frame = local_frame(old_mesh, e);
  bool crossed[3] = {false, false, false};  // lower, middle, upper parallel member
  auto visit = [&](const EdgeIndex& m, bool cross_member) {
    const auto r = segment_intersection(seg, old_mesh.edge(m));
    if (r.kind == IntersectionKind::kEmpty) return;
    if (r.kind == IntersectionKind::kCollinearOverlap) {
      mark_degenerate(out.degenerate, out.reason, "collinear overlap with " + to_string(m));
      return;
    }
    if (!r.proper()) {
      mark_degenerate(out.degenerate, out.reason, "endpoint contact with " + to_string(m));
      return;
    }
    out.hits.push_back({r.point, m});
    if (cross_member) {
      ++out.h_count;
    } else {
      ++out.v_count;
      crossed[m.j - (j - 1)] = true;
    }
  };
  for (const auto& m : frame.cross) visit(m, true);
  for (const auto& m : frame.parallel) visit(m, false);

  if (out.degenerate) {
    if (strict) throw RemapError(ErrorCode::kDegenerateEdge, to_string(e) + ": " + out.reason);
    out.symmetric_label = "degenerate";
    out.label = "degenerate";
    return out;
  }

  out.group = group_from_counts(out.h_count, out.v_count);
  const std::string counts =
      "H" + std::to_string(out.h_count) + "V" + std::to_string(out.v_count);
  if (!out.group) {
    throw RemapError(ErrorCode::kInvalidCombination, to_string(e) + ": counts " + counts);
  }
  const bool top_out = is_up(a.quadrant);
  const bool bottom_out = !is_up(b.quadrant);
  const int expected_h = (top_out ? 1 : 0) + (bottom_out ? 1 : 0);
  const bool diagonal = is_right(a.quadrant) != is_right(b.quadrant);
  if (expected_h != out.h_count || diagonal != (out.v_count % 2 == 1)) {
    throw RemapError(ErrorCode::kInvalidCombination,
                     to_string(e) + ": counts " + counts + " disagree with regions A" +
                         std::to_string(out.a_region) + "B" + std::to_string(out.b_region));
  }

  std::string label = counts;
  const std::string ud = top_out ? "U" : "D";
  if (out.h_count == 1) {
    if (out.v_count == 0) label += ud;
    if (out.v_count == 1) label += (crossed[1] ? "A" : "B") + ud;
    if (out.v_count == 2) label += top_out ? "A" : "B";
  } else if (out.h_count == 2) {
    if (out.v_count == 1) label += crossed[0] ? "A" : (crossed[1] ? "B" : "C");
    if (out.v_count == 2) label += (crossed[0] && crossed[2]) ? "B" : "A";
  }
  out.symmetric_label = label;
  out.label = label + (is_right(a.quadrant) ? "-R" : "-L");
  return out;
}

SwapBoundaryClass boundary_class(int i, int j, const StructuredQuadMesh& old_mesh,
                                 const StructuredQuadMesh& new_mesh, bool strict) {
  if (i < 2 || i > old_mesh.M() - 1 || j < 2 || j > old_mesh.N() - 1) {
    throw RemapError(ErrorCode::kOutOfBounds,
                     "vertex (" + std::to_string(i) + "," + std::to_string(j) + ") is not interior");
  }
  SwapBoundaryClass out;
  out.i = i;
  out.j = j;
  const Point2 q = new_mesh.vertex(i, j);
  const VertexAssignment asg = assign_vertex(q, old_mesh, i, j);
  out.quadrant = asg.quadrant;
  out.region = region_number(asg.quadrant);
  if (asg.on_boundary) mark_degenerate(out.degenerate, out.reason, "vertex on an old edge");

  const bool right = is_right(asg.quadrant);
  const bool up = is_up(asg.quadrant);
  // The new horizontal edge through Q heading toward x_i^a.
  const Segment toward = right ? Segment{new_mesh.vertex(i - 1, j), q}
                               : Segment{q, new_mesh.vertex(i + 1, j)};
  const Segment upper{old_mesh.vertex(i, j), old_mesh.vertex(i, j + 1)};
  const Segment lower{old_mesh.vertex(i, j - 1), old_mesh.vertex(i, j)};
  const auto near_half = segment_intersection(toward, up ? upper : lower);
  const auto far_half = segment_intersection(toward, up ? lower : upper);

  auto note = [&](const IntersectionResult& r) {
    if (r.kind == IntersectionKind::kCollinearOverlap) {
      mark_degenerate(out.degenerate, out.reason, "new edge overlaps x_i^a");
    } else if (r.kind == IntersectionKind::kPoint && !r.proper()) {
      mark_degenerate(out.degenerate, out.reason, "V1 at a segment end");
    }
  };
  note(near_half);
  note(far_half);

  if (near_half.kind == IntersectionKind::kPoint) {
    out.v1 = near_half.point;
    out.count = 1;
  } else if (far_half.kind == IntersectionKind::kPoint) {
    out.v1 = far_half.point;
    out.count = 2;
    const Segment side = right ? Segment{old_mesh.vertex(i, j), old_mesh.vertex(i + 1, j)}
                               : Segment{old_mesh.vertex(i - 1, j), old_mesh.vertex(i, j)};
    const auto r2 = segment_intersection({q, out.v1}, side);
    if (r2.kind == IntersectionKind::kPoint && r2.proper()) {
      out.v2 = r2.point;
    } else {
      mark_degenerate(out.degenerate, out.reason, "second frame crossing is not transversal");
    }
  } else if (!out.degenerate) {
    throw RemapError(ErrorCode::kMissingIntersection,
                     "y_" + std::to_string(j) + "^b misses x_" + std::to_string(i) + "^a near Q");
  }
  if (out.degenerate && strict) {
    throw RemapError(ErrorCode::kDegenerateEdge, "vertex (" + std::to_string(i) + "," +
                                                     std::to_string(j) + "): " + out.reason);
  }
  return out;
}

}  // namespace

EdgeFrameClass classify_edge_vs_frame(const EdgeIndex& e, const StructuredQuadMesh& old_mesh,
                                      const StructuredQuadMesh& new_mesh, bool strict) {
  if (old_mesh.M() != new_mesh.M() || old_mesh.N() != new_mesh.N()) {
    throw RemapError(ErrorCode::kDimensionMismatch, "old and new meshes differ in size");
  }
  if (e.family == EdgeFamily::kVertical) return classify_vertical(e.i, e.j, old_mesh, new_mesh, strict);
  EdgeFrameClass out =
      classify_vertical(e.j, e.i, old_mesh.transposed(), new_mesh.transposed(), strict);
  out.edge = e;
  for (auto& hit : out.hits) {
    hit.point = swap_xy(hit.point);
    hit.member = transpose_index(hit.member);
  }
  return out;
}

SwapBoundaryClass classify_swap_boundary(int i, int j, const StructuredQuadMesh& old_mesh,
                                         const StructuredQuadMesh& new_mesh, bool strict) {
  if (old_mesh.M() != new_mesh.M() || old_mesh.N() != new_mesh.N()) {
    throw RemapError(ErrorCode::kDimensionMismatch, "old and new meshes differ in size");
  }
  return boundary_class(i, j, old_mesh, new_mesh, strict);
}

namespace {

LocalSwapClass local_swap_vertical(int i, int j, const StructuredQuadMesh& old_mesh,
                                   const StructuredQuadMesh& new_mesh) {
  LocalSwapClass out;
  out.edge_class = classify_vertical(i, j, old_mesh, new_mesh, false);
  out.upper = boundary_class(i, j + 1, old_mesh, new_mesh, false);
  out.lower = boundary_class(i, j, old_mesh, new_mesh, false);
  out.degenerate = out.edge_class.degenerate || out.upper.degenerate || out.lower.degenerate;
  if (out.degenerate) {
    out.path = "degenerate";
    return out;
  }
  out.path = std::string(quadrant_name(out.edge_class.a_quadrant)) + "-" +
             std::string(quadrant_name(out.edge_class.b_quadrant)) + "-" +
             std::string(group_abbrev(*out.edge_class.group)) + "-U" +
             std::to_string(out.upper.count) + "S" + std::to_string(out.lower.count);
  return out;
}

void census_direction(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh,
                      CaseCensus& census) {
  for (int j = 1; j < old_mesh.N(); ++j) {
    for (int i = 2; i < old_mesh.M(); ++i) {
      if (j < 2 || j + 1 > old_mesh.N() - 1) {
        ++census.boundary_adjacent_edges;
        continue;
      }
      try {
        const LocalSwapClass c = local_swap_vertical(i, j, old_mesh, new_mesh);
        if (c.edge_class.degenerate) {
          ++census.degenerate_edges;
        } else {
          ++census.classified_edges;
          ++census.edge_labels[c.edge_class.label];
        }
        if (c.degenerate) {
          ++census.degenerate_swap_regions;
        } else {
          ++census.swap_paths[c.path];
        }
      } catch (const RemapError& err) {
        if (err.code() != ErrorCode::kInvalidCombination) throw;
        ++census.invalid_combinations;
      }
    }
  }
}

}  // namespace

LocalSwapClass classify_local_swap(const EdgeIndex& e, const StructuredQuadMesh& old_mesh,
                                   const StructuredQuadMesh& new_mesh) {
  if (old_mesh.M() != new_mesh.M() || old_mesh.N() != new_mesh.N()) {
    throw RemapError(ErrorCode::kDimensionMismatch, "old and new meshes differ in size");
  }
  if (e.family == EdgeFamily::kVertical) return local_swap_vertical(e.i, e.j, old_mesh, new_mesh);
  LocalSwapClass out = local_swap_vertical(e.j, e.i, old_mesh.transposed(), new_mesh.transposed());
  out.edge_class.edge = e;
  return out;
}

CaseCensus case_census(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh) {
  if (old_mesh.M() != new_mesh.M() || old_mesh.N() != new_mesh.N()) {
    throw RemapError(ErrorCode::kDimensionMismatch, "old and new meshes differ in size");
  }
  CaseCensus census;
  census_direction(old_mesh, new_mesh, census);
  census_direction(old_mesh.transposed(), new_mesh.transposed(), census);
  return census;
}

}  // namespace quadremap
