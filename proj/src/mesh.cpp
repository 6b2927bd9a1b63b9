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

#include "quadremap/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "quadremap/error.hpp"

namespace quadremap {

std::string to_string(const CellIndex& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

std::string to_string(const EdgeIndex& e) {
  return std::string(e.family == EdgeFamily::kVertical ? "V" : "H") + "(" + std::to_string(e.i) +
         "," + std::to_string(e.j) + ")";
}

namespace {

// A quad is simple and counterclockwise iff one of its diagonals splits it
// into two counterclockwise triangles.
bool simple_ccw_quad(const std::array<Point2, 4>& v) {
  const bool diag02 = orient(v[0], v[1], v[2]) > 0.0 && orient(v[0], v[2], v[3]) > 0.0;
  const bool diag13 = orient(v[1], v[2], v[3]) > 0.0 && orient(v[1], v[3], v[0]) > 0.0;
  return (diag02 || diag13) && signed_area(v) > 0.0;
}

}  // namespace

StructuredQuadMesh::StructuredQuadMesh(int M, int N, std::vector<Point2> vertices)
    : M_(M), N_(N), vertices_(std::move(vertices)) {
  if (M < 2 || N < 2) {
    throw RemapError(ErrorCode::kDimensionMismatch,
                     "mesh needs at least 2x2 vertices, got " + std::to_string(M) + "x" +
                         std::to_string(N));
  }
  if (vertices_.size() != static_cast<std::size_t>(M) * static_cast<std::size_t>(N)) {
    throw RemapError(ErrorCode::kDimensionMismatch,
                     "expected " + std::to_string(M * N) + " vertices, got " +
                         std::to_string(vertices_.size()));
  }
  for (const auto& p : vertices_) {
    if (!is_finite(p)) throw RemapError(ErrorCode::kNonFinite, "non-finite vertex coordinate");
  }
  for (int j = 1; j < N_; ++j) {
    for (int i = 1; i < M_; ++i) {
      if (!simple_ccw_quad(cell({i, j}))) {
        throw RemapError(ErrorCode::kNonSimpleCell, "cell " + to_string(CellIndex{i, j}));
      }
    }
  }
}

bool StructuredQuadMesh::has_edge(const EdgeIndex& e) const {
  if (e.family == EdgeFamily::kVertical) return e.i >= 1 && e.i <= M_ && e.j >= 1 && e.j < N_;
  return e.i >= 1 && e.i < M_ && e.j >= 1 && e.j <= N_;
}

bool StructuredQuadMesh::is_boundary_edge(const EdgeIndex& e) const {
  if (e.family == EdgeFamily::kVertical) return e.i == 1 || e.i == M_;
  return e.j == 1 || e.j == N_;
}

std::array<Point2, 4> StructuredQuadMesh::cell(CellIndex c) const {
  if (!has_cell(c)) throw RemapError(ErrorCode::kOutOfBounds, "cell " + to_string(c));
  return {vertex(c.i, c.j), vertex(c.i + 1, c.j), vertex(c.i + 1, c.j + 1), vertex(c.i, c.j + 1)};
}

double StructuredQuadMesh::cell_area(CellIndex c) const { return signed_area(cell(c)); }

Segment StructuredQuadMesh::edge(const EdgeIndex& e) const {
  if (!has_edge(e)) throw RemapError(ErrorCode::kOutOfBounds, "edge " + to_string(e));
  if (e.family == EdgeFamily::kVertical) return {vertex(e.i, e.j), vertex(e.i, e.j + 1)};
  return {vertex(e.i, e.j), vertex(e.i + 1, e.j)};
}

StructuredQuadMesh StructuredQuadMesh::transposed() const {
  std::vector<Point2> t;
  t.reserve(vertices_.size());
  for (int jt = 1; jt <= M_; ++jt) {
    for (int it = 1; it <= N_; ++it) {
      const Point2 p = vertex(jt, it);
      t.push_back({p.y, p.x});
    }
  }
  return StructuredQuadMesh(N_, M_, std::move(t));
}

StructuredQuadMesh build_mesh(int M, int N, std::vector<Point2> points) {
  return StructuredQuadMesh(M, N, std::move(points));
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_mesh(std::ostream& os, const StructuredQuadMesh& mesh) {
  os << mesh.M() << ' ' << mesh.N() << '\n';
  for (const auto& p : mesh.vertices()) os << format_real(p.x) << ' ' << format_real(p.y) << '\n';
}

StructuredQuadMesh read_mesh(std::istream& is) {
  int M = 0;
  int N = 0;
  if (!(is >> M >> N)) throw RemapError(ErrorCode::kIo, "missing mesh header");
  if (M < 2 || N < 2) throw RemapError(ErrorCode::kDimensionMismatch, "bad mesh header");
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(M) * static_cast<std::size_t>(N));
  Point2 p;
  while (is >> p.x >> p.y) pts.push_back(p);
  if (!is.eof()) throw RemapError(ErrorCode::kIo, "malformed vertex line");
  return StructuredQuadMesh(M, N, std::move(pts));
}

void write_mesh_file(const std::string& path, const StructuredQuadMesh& mesh) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw RemapError(ErrorCode::kIo, "cannot open " + path);
  write_mesh(os, mesh);
  if (!os) throw RemapError(ErrorCode::kIo, "write failed: " + path);
}

StructuredQuadMesh read_mesh_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw RemapError(ErrorCode::kIo, "cannot open " + path);
  return read_mesh(is);
}

LocalPatch local_patch(const StructuredQuadMesh& mesh, CellIndex c) {
  if (!mesh.has_cell(c)) throw RemapError(ErrorCode::kOutOfBounds, "cell " + to_string(c));
  LocalPatch patch{c, {}};
  for (int dj = -1; dj <= 1; ++dj) {
    for (int di = -1; di <= 1; ++di) {
      const CellIndex m{c.i + di, c.j + dj};
      if (mesh.has_cell(m)) patch.members.push_back(m);
    }
  }
  return patch;
}

LocalFrame local_frame(const StructuredQuadMesh& mesh, const EdgeIndex& e) {
  if (!mesh.has_edge(e)) throw RemapError(ErrorCode::kOutOfBounds, "edge " + to_string(e));
  LocalFrame frame{e, {}, {}};
  auto add = [&](std::vector<EdgeIndex>& out, EdgeIndex m) {
    if (mesh.has_edge(m)) out.push_back(m);
  };
  const int i = e.i;
  const int j = e.j;
  if (e.family == EdgeFamily::kVertical) {
    add(frame.cross, {EdgeFamily::kHorizontal, i - 1, j});
    add(frame.cross, {EdgeFamily::kHorizontal, i, j});
    add(frame.cross, {EdgeFamily::kHorizontal, i - 1, j + 1});
    add(frame.cross, {EdgeFamily::kHorizontal, i, j + 1});
    add(frame.parallel, {EdgeFamily::kVertical, i, j - 1});
    add(frame.parallel, {EdgeFamily::kVertical, i, j});
    add(frame.parallel, {EdgeFamily::kVertical, i, j + 1});
  } else {
    add(frame.cross, {EdgeFamily::kVertical, i, j - 1});
    add(frame.cross, {EdgeFamily::kVertical, i, j});
    add(frame.cross, {EdgeFamily::kVertical, i + 1, j - 1});
    add(frame.cross, {EdgeFamily::kVertical, i + 1, j});
    add(frame.parallel, {EdgeFamily::kHorizontal, i - 1, j});
    add(frame.parallel, {EdgeFamily::kHorizontal, i, j});
    add(frame.parallel, {EdgeFamily::kHorizontal, i + 1, j});
  }
  return frame;
}

namespace {

// Outer boundary of the 4-cell patch around interior vertex (i,j).
Polygon vertex_patch_ring(const StructuredQuadMesh& m, int i, int j) {
  return {m.vertex(i - 1, j - 1), m.vertex(i, j - 1),     m.vertex(i + 1, j - 1),
          m.vertex(i + 1, j),     m.vertex(i + 1, j + 1), m.vertex(i, j + 1),
          m.vertex(i - 1, j + 1), m.vertex(i - 1, j)};
}

void add_unique(std::vector<Point2>& pts, Point2 p) {
  for (const auto& q : pts) {
    if (distance(p, q) <= kGeomEps) return;
  }
  pts.push_back(p);
}

// Contacts between the curve through the cross family of `b` (index `fixed_b`)
// and the transverse curve of `a` (index `fixed_a`), windowed by A1.
void check_curve_pair(const StructuredQuadMesh& b, const StructuredQuadMesh& a, int ib, int ja,
                      EdgeFamily fam, AssumptionReport& report) {
  // b curve: vertical polyline x_ib through (ib, k); a curve: horizontal polyline y_ja through (l, ja).
  std::vector<Point2> contacts;
  bool collinear = false;
  const int k0 = std::max(1, ja - 2);
  const int k1 = std::min(b.N() - 1, ja + 1);
  const int l0 = std::max(1, ib - 2);
  const int l1 = std::min(a.M() - 1, ib + 1);
  for (int k = k0; k <= k1; ++k) {
    const Segment sb{b.vertex(ib, k), b.vertex(ib, k + 1)};
    for (int l = l0; l <= l1; ++l) {
      const auto r = segment_intersection(sb, {a.vertex(l, ja), a.vertex(l + 1, ja)});
      if (r.kind == IntersectionKind::kPoint) {
        add_unique(contacts, r.point);
      } else if (r.kind == IntersectionKind::kCollinearOverlap) {
        collinear = true;
      }
    }
  }
  if (collinear || contacts.size() > 1) {
    report.a2 = false;
    report.a2_violations.push_back(
        {fam, fam == EdgeFamily::kVertical ? ib : ja, fam == EdgeFamily::kVertical ? ja : ib,
         static_cast<int>(contacts.size()), collinear});
  }
}

bool near_boundary_endpoint(const StructuredQuadMesh& m, const EdgeIndex& e, Point2 p) {
  const int di = e.family == EdgeFamily::kHorizontal ? 1 : 0;
  const int dj = 1 - di;
  if (m.is_boundary_vertex(e.i, e.j) && distance(p, m.vertex(e.i, e.j)) <= kGeomEps) return true;
  return m.is_boundary_vertex(e.i + di, e.j + dj) &&
         distance(p, m.vertex(e.i + di, e.j + dj)) <= kGeomEps;
}

}  // namespace

AssumptionReport validate_assumptions(const StructuredQuadMesh& old_mesh,
                                      const StructuredQuadMesh& new_mesh) {
  if (old_mesh.M() != new_mesh.M() || old_mesh.N() != new_mesh.N()) {
    throw RemapError(ErrorCode::kDimensionMismatch, "old and new meshes differ in size");
  }
  const int M = old_mesh.M();
  const int N = old_mesh.N();
  AssumptionReport report;

  for (int j = 1; j <= N; ++j) {
    for (int i = 1; i <= M; ++i) {
      if (old_mesh.is_boundary_vertex(i, j)) {
        const Point2 q = new_mesh.vertex(i, j);
        if (distance(old_mesh.vertex(i, j), q) <= kGeomEps) continue;
        report.shared_boundary = false;
        report.boundary_mismatches.emplace_back(i, j);
        // A boundary vertex may slide along the old boundary next to P_{i,j}.
        bool on_side = false;
        const bool vertical_side = i == 1 || i == M;
        const bool horizontal_side = j == 1 || j == N;
        if (vertical_side != horizontal_side) {
          const int di = horizontal_side ? 1 : 0;
          const int dj = 1 - di;
          on_side = distance_to_segment(q, {old_mesh.vertex(i - di, j - dj), old_mesh.vertex(i, j)}) <=
                        kGeomEps ||
                    distance_to_segment(q, {old_mesh.vertex(i, j), old_mesh.vertex(i + di, j + dj)}) <=
                        kGeomEps;
        }
        if (!on_side) {
          report.a1 = false;
          report.a1_violations.emplace_back(i, j);
        }
        continue;
      }
      const Polygon ring = vertex_patch_ring(old_mesh, i, j);
      if (locate_point(ring, new_mesh.vertex(i, j)) != Containment::kInside) {
        report.a1 = false;
        report.a1_violations.emplace_back(i, j);
      }
    }
  }

  // x_i^b against y_j^a, then y_j^b against x_i^a through the transposes.
  const StructuredQuadMesh old_t = old_mesh.transposed();
  const StructuredQuadMesh new_t = new_mesh.transposed();
  for (int i = 1; i <= M; ++i) {
    for (int j = 1; j <= N; ++j) {
      check_curve_pair(new_mesh, old_mesh, i, j, EdgeFamily::kVertical, report);
      check_curve_pair(new_t, old_t, j, i, EdgeFamily::kHorizontal, report);
    }
  }

  for (int fam = 0; fam < 2; ++fam) {
    const EdgeFamily family = fam == 0 ? EdgeFamily::kVertical : EdgeFamily::kHorizontal;
    const int imax = family == EdgeFamily::kVertical ? M : M - 1;
    const int jmax = family == EdgeFamily::kVertical ? N - 1 : N;
    for (int j = 1; j <= jmax; ++j) {
      for (int i = 1; i <= imax; ++i) {
        const EdgeIndex ne{family, i, j};
        const Segment sn = new_mesh.edge(ne);
        const bool new_boundary = new_mesh.is_boundary_edge(ne);
        if (!new_boundary) {
          const Segment so = old_mesh.edge(ne);
          if (distance(sn.a, so.a) <= kGeomEps && distance(sn.b, so.b) <= kGeomEps) {
            ++report.common_interior_edges;
          }
        }
        for (int of = 0; of < 2; ++of) {
          const EdgeFamily ofam = of == 0 ? EdgeFamily::kVertical : EdgeFamily::kHorizontal;
          for (int oj = j - 2; oj <= j + 2; ++oj) {
            for (int oi = i - 2; oi <= i + 2; ++oi) {
              const EdgeIndex oe{ofam, oi, oj};
              if (!old_mesh.has_edge(oe)) continue;
              const auto r = segment_intersection(sn, old_mesh.edge(oe));
              if (r.kind == IntersectionKind::kEmpty || r.proper()) continue;
              if (r.kind == IntersectionKind::kCollinearOverlap) {
                if (new_boundary && old_mesh.is_boundary_edge(oe)) continue;
                report.a3 = false;
                report.a3_warnings.push_back({ne, oe, r.overlap.a, true});
                continue;
              }
              if (near_boundary_endpoint(new_mesh, ne, r.point) ||
                  near_boundary_endpoint(old_mesh, oe, r.point)) {
                continue;
              }
              report.a3 = false;
              report.a3_warnings.push_back({ne, oe, r.point, false});
            }
          }
        }
      }
    }
  }
  return report;
}

std::string_view quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::kLU: return "LU";
    case Quadrant::kRU: return "RU";
    case Quadrant::kLD: return "LD";
    case Quadrant::kRD: return "RD";
  }
  return "?";
}

CellIndex quadrant_cell(Quadrant q, int i, int j) {
  switch (q) {
    case Quadrant::kRU: return {i, j};
    case Quadrant::kLU: return {i - 1, j};
    case Quadrant::kLD: return {i - 1, j - 1};
    case Quadrant::kRD: return {i, j - 1};
  }
  return {i, j};
}

VertexAssignment assign_vertex(Point2 q, const StructuredQuadMesh& mesh, int i, int j) {
  if (i < 1 || i > mesh.M() || j < 1 || j > mesh.N()) {
    throw RemapError(ErrorCode::kOutOfBounds, "vertex (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ")");
  }
  if (!is_finite(q)) throw RemapError(ErrorCode::kNonFinite, "query point");
  const Point2 p = mesh.vertex(i, j);

  bool fallback = mesh.is_boundary_vertex(i, j);
  if (!fallback) {
    for (Quadrant quad : {Quadrant::kRU, Quadrant::kLU, Quadrant::kLD, Quadrant::kRD}) {
      if (!is_convex_ccw(mesh.cell(quadrant_cell(quad, i, j)))) fallback = true;
    }
  }

  VertexAssignment out;
  if (fallback) {
    // Order encodes the tie-break: Right before Left, Up before Down.
    for (Quadrant quad : {Quadrant::kRU, Quadrant::kRD, Quadrant::kLU, Quadrant::kLD}) {
      const CellIndex c = quadrant_cell(quad, i, j);
      if (!mesh.has_cell(c)) continue;
      const Containment where = locate_point(mesh.cell(c), q);
      if (where == Containment::kOutside) continue;
      out.quadrant = quad;
      out.on_boundary = where == Containment::kBoundary;
      return out;
    }
    throw RemapError(ErrorCode::kOutsidePatch,
                     "vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  const Point2 up = mesh.vertex(i, j + 1);
  const Point2 right = mesh.vertex(i + 1, j);
  const Point2 down = mesh.vertex(i, j - 1);
  const Point2 left = mesh.vertex(i - 1, j);
  for (Point2 end : {up, right, down, left}) {
    if (distance_to_segment(q, {p, end}) <= kGeomEps) out.on_boundary = true;
  }

  // Triangle areas against the four spokes leaving P_{i,j}; values within
  // tolerance of zero count toward Right and Up.
  auto area = [&](Point2 end) {
    const double a = orient(p, end, q);
    return std::abs(a) <= kGeomEps * distance(p, end) ? 0.0 : a;
  };
  if (area(up) <= 0.0) {
    if (area(right) >= 0.0) {
      out.quadrant = Quadrant::kRU;
    } else {
      out.quadrant = area(down) >= 0.0 ? Quadrant::kRD : Quadrant::kLD;
    }
  } else {
    if (area(left) <= 0.0) {
      out.quadrant = Quadrant::kLU;
    } else {
      out.quadrant = area(down) < 0.0 ? Quadrant::kLD : Quadrant::kRD;
    }
  }

  // A1 check: the chosen cell must actually hold q.
  if (locate_point(mesh.cell(quadrant_cell(out.quadrant, i, j)), q) == Containment::kOutside) {
    throw RemapError(ErrorCode::kOutsidePatch,
                     "vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return out;
}

}  // namespace quadremap
