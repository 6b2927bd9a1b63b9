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

#include "quadremap/swept.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

#include "quadremap/error.hpp"

namespace quadremap {

namespace {

// Splits a (possibly self-intersecting) swept quad a,b,c,d into simple lobes
// whose signed areas add up to the loop's.
std::vector<Polygon> loop_lobes(const Polygon& loop) {
  const Point2 qa = loop[0], qb = loop[1], pb = loop[2], pa = loop[3];
  const auto r02 = segment_intersection({qa, qb}, {pb, pa});
  if (r02.proper()) return {{qa, r02.point, pa}, {r02.point, qb, pb}};
  const auto r13 = segment_intersection({qb, pb}, {pa, qa});
  if (r13.proper()) return {{qa, qb, r13.point}, {r13.point, pb, pa}};
  return {loop};
}

CellIndex owner_among(const Polygon& piece, std::span<const CellIndex> candidates,
                      const StructuredQuadMesh& mesh, bool must_find) {
  const Point2 probe = interior_point(piece);
  CellIndex best{0, 0};
  double best_margin = -std::numeric_limits<double>::infinity();
  for (const CellIndex& c : candidates) {
    const auto quad = mesh.cell(c);
    const Containment where = locate_point(quad, probe);
    if (where == Containment::kInside) return c;
    const double margin = inside_margin(quad, probe);
    if ((where == Containment::kBoundary || !must_find) && margin > best_margin) {
      best_margin = margin;
      best = c;
    }
  }
  if (best.i == 0) {
    throw RemapError(ErrorCode::kAssumptionViolated,
                     "piece at (" + format_real(probe.x) + "," + format_real(probe.y) +
                         ") lies outside the local frame cells");
  }
  return best;
}

// Vertical face F_{i,j+1/2} in the coordinates of the given meshes.
SweptRegion vertical_region(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh,
                            int i, int j) {
  SweptRegion r;
  r.edge = {EdgeFamily::kVertical, i, j};
  r.loop = {new_mesh.vertex(i, j), new_mesh.vertex(i, j + 1), old_mesh.vertex(i, j + 1),
            old_mesh.vertex(i, j)};
  r.signed_area = signed_area(r.loop);

  const LocalFrame frame = local_frame(old_mesh, r.edge);
  std::vector<Segment> cuts;
  for (const auto& e : frame.cross) cuts.push_back(old_mesh.edge(e));
  for (const auto& e : frame.parallel) cuts.push_back(old_mesh.edge(e));

  std::vector<CellIndex> candidates;
  for (int jj = j - 1; jj <= j + 1; ++jj) {
    for (int ii = i - 1; ii <= i; ++ii) {
      if (old_mesh.has_cell({ii, jj})) candidates.push_back({ii, jj});
    }
  }

  for (Polygon& lobe : loop_lobes(r.loop)) {
    const double lobe_area = signed_area(lobe);
    if (is_degenerate_area(lobe, lobe_area)) {
      if (lobe_area != 0.0 || remove_repeated(lobe).size() >= 3) ++r.degenerate_lobes;
      continue;
    }
    for (Polygon& piece : split_by_segments({std::move(lobe)}, cuts)) {
      const double a = signed_area(piece);
      if (a == 0.0) continue;
      const bool sliver = is_degenerate_area(piece, a);
      const CellIndex owner = owner_among(piece, candidates, old_mesh, !sliver);
      r.pieces.push_back({std::move(piece), owner, a});
    }
  }
  return r;
}

Point2 swap_xy(Point2 p) { return {p.y, p.x}; }

Polygon untranspose(const Polygon& poly) {
  Polygon out;
  out.reserve(poly.size());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out.push_back(swap_xy(*it));
  return out;
}

// Maps a region of transposed vertical face (j,i) back to horizontal face (i,j).
SweptRegion untranspose(SweptRegion t) {
  SweptRegion r;
  r.edge = {EdgeFamily::kHorizontal, t.edge.j, t.edge.i};
  Polygon loop = untranspose(t.loop);
  std::rotate(loop.begin(), loop.begin() + 2, loop.end());
  r.loop = std::move(loop);
  r.signed_area = t.signed_area;
  r.degenerate_lobes = t.degenerate_lobes;
  for (auto& p : t.pieces) {
    r.pieces.push_back({untranspose(p.polygon), {p.old_cell.j, p.old_cell.i}, p.area});
  }
  return r;
}

void require_same_shape(const StructuredQuadMesh& a, const StructuredQuadMesh& b) {
  if (a.M() != b.M() || a.N() != b.N()) {
    throw RemapError(ErrorCode::kDimensionMismatch, "old and new meshes differ in size");
  }
}

}  // namespace

SweptRegion swept_region(const EdgeIndex& e, const StructuredQuadMesh& old_mesh,
                         const StructuredQuadMesh& new_mesh) {
  require_same_shape(old_mesh, new_mesh);
  if (!old_mesh.has_edge(e)) throw RemapError(ErrorCode::kOutOfBounds, "edge " + to_string(e));
  if (e.family == EdgeFamily::kVertical) return vertical_region(old_mesh, new_mesh, e.i, e.j);
  return untranspose(vertical_region(old_mesh.transposed(), new_mesh.transposed(), e.j, e.i));
}

double cell_area_fb(CellIndex c, const StructuredQuadMesh& old_mesh,
                    const StructuredQuadMesh& new_mesh) {
  require_same_shape(old_mesh, new_mesh);
  if (!old_mesh.has_cell(c)) throw RemapError(ErrorCode::kOutOfBounds, "cell " + to_string(c));
  auto flux = [&](EdgeFamily f, int i, int j) {
    return swept_region({f, i, j}, old_mesh, new_mesh).signed_area;
  };
  return old_mesh.cell_area(c) - flux(EdgeFamily::kVertical, c.i, c.j) +
         flux(EdgeFamily::kVertical, c.i + 1, c.j) - flux(EdgeFamily::kHorizontal, c.i, c.j) +
         flux(EdgeFamily::kHorizontal, c.i, c.j + 1);
}

double swept_mass(const SweptRegion& r, std::span<const double> densities, int old_M) {
  double mass = 0.0;
  for (const auto& p : r.pieces) {
    const long k = static_cast<long>(p.old_cell.j - 1) * (old_M - 1) + (p.old_cell.i - 1);
    if (p.old_cell.i < 1 || p.old_cell.i >= old_M || k < 0 ||
        static_cast<std::size_t>(k) >= densities.size()) {
      throw RemapError(ErrorCode::kMissingDensity, "no density for cell " + to_string(p.old_cell));
    }
    mass += p.area * densities[static_cast<std::size_t>(k)];
  }
  return mass;
}

std::vector<SweptRegion> all_swept_regions(const StructuredQuadMesh& old_mesh,
                                           const StructuredQuadMesh& new_mesh) {
  require_same_shape(old_mesh, new_mesh);
  std::vector<SweptRegion> out;
  for (int j = 1; j < old_mesh.N(); ++j) {
    for (int i = 2; i < old_mesh.M(); ++i) out.push_back(vertical_region(old_mesh, new_mesh, i, j));
  }
  const StructuredQuadMesh old_t = old_mesh.transposed();
  const StructuredQuadMesh new_t = new_mesh.transposed();
  for (int i = 1; i < old_mesh.M(); ++i) {
    for (int j = 2; j < old_mesh.N(); ++j) {
      out.push_back(untranspose(vertical_region(old_t, new_t, j, i)));
    }
  }
  return out;
}

RemapResult remap_fb(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh,
                     std::span<const double> old_masses) {
  const auto start = std::chrono::steady_clock::now();
  require_same_shape(old_mesh, new_mesh);
  const std::size_t ncells = static_cast<std::size_t>(old_mesh.num_cells());
  if (old_masses.size() != ncells) {
    throw RemapError(ErrorCode::kMissingDensity, "expected " + std::to_string(ncells) + " masses");
  }
  std::vector<double> density(ncells);
  for (std::size_t k = 0; k < ncells; ++k) {
    if (!std::isfinite(old_masses[k])) throw RemapError(ErrorCode::kNonFinite, "old mass");
    density[k] = old_masses[k] / old_mesh.cell_area(old_mesh.cell_at(static_cast<int>(k)));
  }

  RemapResult result;
  result.method = RemapMethod::kFB;
  result.masses.assign(old_masses.begin(), old_masses.end());
  const int M = old_mesh.M();

  for (const SweptRegion& r : all_swept_regions(old_mesh, new_mesh)) {
    const double flux = swept_mass(r, density, M);
    CellIndex gain;
    CellIndex lose;
    if (r.edge.family == EdgeFamily::kVertical) {
      gain = {r.edge.i - 1, r.edge.j};
      lose = {r.edge.i, r.edge.j};
    } else {
      gain = {r.edge.i, r.edge.j - 1};
      lose = {r.edge.i, r.edge.j};
    }
    result.masses[static_cast<std::size_t>(old_mesh.cell_offset(gain))] += flux;
    result.masses[static_cast<std::size_t>(old_mesh.cell_offset(lose))] -= flux;
    result.polygon_count += static_cast<long>(r.pieces.size());
    result.degeneracy_events += r.degenerate_lobes;
  }

  result.densities.resize(ncells);
  for (std::size_t k = 0; k < ncells; ++k) {
    result.densities[k] =
        result.masses[k] / new_mesh.cell_area(new_mesh.cell_at(static_cast<int>(k)));
  }
  result.conservation_residual = conservation_residual(old_masses, result.masses);
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace quadremap
