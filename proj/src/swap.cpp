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

#include "quadremap/swap.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include "quadremap/error.hpp"

namespace quadremap {

std::string_view swap_kind_name(SwapKind kind) {
  return kind == SwapKind::kInvading ? "invading" : "occupied";
}

namespace {

// Point shared by x_i^a and x_i^b; `a` and `b` are arc parameters along the
// old and new curve (segment k covers [k-1, k]). At the curve ends the two
// points may differ when boundary vertices slide along the domain boundary;
// the strip is then closed by the boundary segment between them.
struct Contact {
  double a;
  double b;
  Point2 p;   // on the old curve
  Point2 pb;  // on the new curve
};

struct StripContacts {
  std::vector<Contact> contacts;
  bool collinear = false;
};

StripContacts strip_contacts(const StructuredQuadMesh& old_mesh,
                             const StructuredQuadMesh& new_mesh, int i) {
  const int N = old_mesh.N();
  StripContacts out;
  for (int k = 1; k < N; ++k) {
    const Segment sa{old_mesh.vertex(i, k), old_mesh.vertex(i, k + 1)};
    for (int l = std::max(1, k - 2); l <= std::min(N - 1, k + 2); ++l) {
      const auto r = segment_intersection(sa, {new_mesh.vertex(i, l), new_mesh.vertex(i, l + 1)});
      if (r.kind == IntersectionKind::kPoint) {
        out.contacts.push_back({k - 1 + r.t, l - 1 + r.u, r.point, r.point});
      } else if (r.kind == IntersectionKind::kCollinearOverlap) {
        out.collinear = true;
        out.contacts.push_back({k - 1 + r.overlap_t0, l - 1 + r.overlap_u0, r.overlap.a, r.overlap.a});
        out.contacts.push_back({k - 1 + r.overlap_t1, l - 1 + r.overlap_u1, r.overlap.b, r.overlap.b});
      }
    }
  }
  std::sort(out.contacts.begin(), out.contacts.end(), [](const Contact& x, const Contact& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  });
  std::vector<Contact> unique;
  for (const Contact& c : out.contacts) {
    if (!unique.empty() && distance(unique.back().p, c.p) <= kGeomEps) continue;
    if (!unique.empty() && c.b < unique.back().b) {
      throw RemapError(ErrorCode::kAssumptionViolated,
                       "curves x_" + std::to_string(i) + " meet out of order");
    }
    unique.push_back(c);
  }
  const Point2 first_a = old_mesh.vertex(i, 1);
  const Point2 last_a = old_mesh.vertex(i, N);
  if (unique.empty() || distance(unique.front().p, first_a) > kGeomEps) {
    unique.insert(unique.begin(), {0.0, 0.0, first_a, new_mesh.vertex(i, 1)});
  }
  if (distance(unique.back().p, last_a) > kGeomEps) {
    unique.push_back({N - 1.0, N - 1.0, last_a, new_mesh.vertex(i, N)});
  }
  out.contacts = std::move(unique);
  return out;
}

struct StripPiece {
  Polygon polygon;
  CellIndex owner_old;
  CellIndex owner_new;
  double area;
};

CellIndex locate_owner(const Polygon& piece, const StructuredQuadMesh& mesh, int i, int row_lo,
                       int row_hi, bool must_find) {
  const Point2 probe = interior_point(piece);
  CellIndex best{0, 0};
  double best_margin = -std::numeric_limits<double>::infinity();
  for (int row = std::max(1, row_lo); row <= std::min(mesh.N() - 1, row_hi); ++row) {
    for (int col = i - 1; col <= i; ++col) {
      const auto quad = mesh.cell({col, row});
      const Containment where = locate_point(quad, probe);
      if (where == Containment::kInside) return {col, row};
      const double margin = inside_margin(quad, probe);
      if ((where == Containment::kBoundary || !must_find) && margin > best_margin) {
        best_margin = margin;
        best = {col, row};
      }
    }
  }
  if (best.i == 0) {
    throw RemapError(ErrorCode::kAssumptionViolated,
                     "swap piece near (" + format_real(probe.x) + "," + format_real(probe.y) +
                         ") escapes the strip around x_" + std::to_string(i));
  }
  return best;
}

// All pieces between x_i^a and x_i^b, each inside one old and one new cell.
std::vector<StripPiece> sweep_strip(const StructuredQuadMesh& old_mesh,
                                    const StructuredQuadMesh& new_mesh, int i, long& degenerate) {
  const int N = old_mesh.N();
  const StripContacts sc = strip_contacts(old_mesh, new_mesh, i);
  std::vector<StripPiece> pieces;
  for (std::size_t m = 0; m + 1 < sc.contacts.size(); ++m) {
    const Contact& c0 = sc.contacts[m];
    const Contact& c1 = sc.contacts[m + 1];
    Polygon lens{c0.p};
    for (int v = 1; v <= N; ++v) {
      const double param = v - 1;
      const Point2 p = old_mesh.vertex(i, v);
      if (param > c0.a && param < c1.a && distance(p, c0.p) > kGeomEps &&
          distance(p, c1.p) > kGeomEps) {
        lens.push_back(p);
      }
    }
    lens.push_back(c1.p);
    lens.push_back(c1.pb);
    for (int v = N; v >= 1; --v) {
      const double param = v - 1;
      const Point2 q = new_mesh.vertex(i, v);
      if (param > c0.b && param < c1.b && distance(q, c0.pb) > kGeomEps &&
          distance(q, c1.pb) > kGeomEps) {
        lens.push_back(q);
      }
    }
    lens.push_back(c0.pb);
    lens = remove_repeated(lens);
    const double lens_area = lens.size() < 3 ? 0.0 : signed_area(lens);
    if (lens.size() < 3 || is_degenerate_area(lens, lens_area)) {
      ++degenerate;
      continue;
    }

    const double lo = std::min(c0.a, c0.b);
    const double hi = std::max(c1.a, c1.b);
    const int row_lo = static_cast<int>(std::floor(lo)) - 1;
    const int row_hi = static_cast<int>(std::ceil(hi)) + 2;
    std::vector<Segment> chords;
    for (int k = std::max(2, row_lo); k <= std::min(N - 1, row_hi); ++k) {
      chords.push_back({old_mesh.vertex(i - 1, k), old_mesh.vertex(i, k)});
      chords.push_back({old_mesh.vertex(i, k), old_mesh.vertex(i + 1, k)});
      chords.push_back({new_mesh.vertex(i - 1, k), new_mesh.vertex(i, k)});
      chords.push_back({new_mesh.vertex(i, k), new_mesh.vertex(i + 1, k)});
    }
    for (Polygon& piece : split_by_segments({std::move(lens)}, chords)) {
      double a = signed_area(piece);
      if (is_degenerate_area(piece, a)) {
        ++degenerate;
        continue;
      }
      if (a < 0.0) {
        std::reverse(piece.begin(), piece.end());
        a = -a;
      }
      const CellIndex owner_old = locate_owner(piece, old_mesh, i, row_lo, row_hi, true);
      const CellIndex owner_new = locate_owner(piece, new_mesh, i, row_lo, row_hi, true);
      if (owner_old.i == owner_new.i) {
        throw RemapError(ErrorCode::kAssumptionViolated,
                         "piece between x_" + std::to_string(i) + " curves has one column");
      }
      pieces.push_back({std::move(piece), owner_old, owner_new, a});
    }
  }
  return pieces;
}

void require_same_shape(const StructuredQuadMesh& a, const StructuredQuadMesh& b) {
  if (a.M() != b.M() || a.N() != b.N()) {
    throw RemapError(ErrorCode::kDimensionMismatch, "old and new meshes differ in size");
  }
}

}  // namespace

SwapSweep sweep_swap_regions(const StructuredQuadMesh& old_mesh,
                             const StructuredQuadMesh& new_mesh) {
  require_same_shape(old_mesh, new_mesh);
  SwapSweep out;
  for (int i = 2; i < old_mesh.M(); ++i) {
    auto pieces = sweep_strip(old_mesh, new_mesh, i, out.degeneracy_events);
    out.vertical_strips.push_back(static_cast<int>(pieces.size()));
    for (auto& p : pieces) {
      out.polygons.push_back({std::move(p.polygon), p.owner_old, p.owner_new, p.area});
    }
  }

  // Horizontal strips are vertical strips of the transposed pair. Pieces in
  // different columns as well as different rows were already emitted above.
  const StructuredQuadMesh old_t = old_mesh.transposed();
  const StructuredQuadMesh new_t = new_mesh.transposed();
  for (int j = 2; j < old_mesh.N(); ++j) {
    auto pieces = sweep_strip(old_t, new_t, j, out.degeneracy_events);
    out.horizontal_strips.push_back(static_cast<int>(pieces.size()));
    for (auto& p : pieces) {
      const CellIndex owner_old{p.owner_old.j, p.owner_old.i};
      const CellIndex owner_new{p.owner_new.j, p.owner_new.i};
      if (owner_old.i != owner_new.i) continue;
      Polygon poly;
      poly.reserve(p.polygon.size());
      for (auto it = p.polygon.rbegin(); it != p.polygon.rend(); ++it) poly.push_back({it->y, it->x});
      out.polygons.push_back({std::move(poly), owner_old, owner_new, p.area});
    }
  }
  return out;
}

SingularPointCensus count_singular_points(const StructuredQuadMesh& old_mesh,
                                          const StructuredQuadMesh& new_mesh) {
  require_same_shape(old_mesh, new_mesh);
  SingularPointCensus census;
  auto scan = [&](const StructuredQuadMesh& a, const StructuredQuadMesh& b, EdgeFamily family,
                  int& count) {
    for (int i = 2; i < a.M(); ++i) {
      const StripContacts sc = strip_contacts(a, b, i);
      if (sc.collinear) {
        throw RemapError(ErrorCode::kCollinearCurves,
                         std::string(family == EdgeFamily::kVertical ? "x_" : "y_") +
                             std::to_string(i) + " curves overlap");
      }
      const Point2 first = a.vertex(i, 1);
      const Point2 last = a.vertex(i, a.N());
      for (const Contact& c : sc.contacts) {
        if (distance(c.p, first) <= kGeomEps || distance(c.p, last) <= kGeomEps) continue;
        if (distance(c.pb, b.vertex(i, 1)) <= kGeomEps) continue;
        if (distance(c.pb, b.vertex(i, b.N())) <= kGeomEps) continue;
        ++count;
        const Point2 p = family == EdgeFamily::kVertical ? c.p : Point2{c.p.y, c.p.x};
        census.points.push_back({family, i, p});
      }
    }
  };
  scan(old_mesh, new_mesh, EdgeFamily::kVertical, census.ns_xx);
  scan(old_mesh.transposed(), new_mesh.transposed(), EdgeFamily::kHorizontal, census.ns_yy);
  return census;
}

CellSwapSummary invading_occupied(CellIndex c, std::span<const SwapPolygon> polygons) {
  CellSwapSummary s;
  for (const auto& p : polygons) {
    if (p.owner_new == c) {
      s.invading_area += p.area;
      s.invading_by_old[p.owner_old] += p.area;
    }
    if (p.owner_old == c) {
      s.occupied_area += p.area;
      s.occupied_by_new[p.owner_new] += p.area;
    }
  }
  return s;
}

std::vector<CellSwapSummary> invading_occupied_all(const StructuredQuadMesh& mesh,
                                                   std::span<const SwapPolygon> polygons) {
  std::vector<CellSwapSummary> out(static_cast<std::size_t>(mesh.num_cells()));
  for (const auto& p : polygons) {
    auto& in = out[static_cast<std::size_t>(mesh.cell_offset(p.owner_new))];
    in.invading_area += p.area;
    in.invading_by_old[p.owner_old] += p.area;
    auto& oc = out[static_cast<std::size_t>(mesh.cell_offset(p.owner_old))];
    oc.occupied_area += p.area;
    oc.occupied_by_new[p.owner_new] += p.area;
  }
  return out;
}

std::map<CellIndex, double> generalized_flux(CellIndex c, std::span<const SwapPolygon> polygons) {
  std::map<CellIndex, double> fa;
  for (const auto& p : polygons) {
    if (p.owner_new == c) fa[p.owner_old] += p.area;
    if (p.owner_old == c) fa[p.owner_new] -= p.area;
  }
  return fa;
}

RemapResult remap_cib(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh,
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

  const SwapSweep sweep = sweep_swap_regions(old_mesh, new_mesh);
  RemapResult result;
  result.method = RemapMethod::kCIB;
  result.masses.assign(old_masses.begin(), old_masses.end());
  for (const auto& p : sweep.polygons) {
    const std::size_t from = static_cast<std::size_t>(old_mesh.cell_offset(p.owner_old));
    const std::size_t to = static_cast<std::size_t>(old_mesh.cell_offset(p.owner_new));
    const double mass = p.area * density[from];
    result.masses[to] += mass;
    result.masses[from] -= mass;
  }
  result.polygon_count = static_cast<long>(sweep.polygons.size());
  result.degeneracy_events = sweep.degeneracy_events;
  try {
    const SingularPointCensus ns = count_singular_points(old_mesh, new_mesh);
    result.ns_xx = ns.ns_xx;
    result.ns_yy = ns.ns_yy;
  } catch (const RemapError& e) {
    if (e.code() != ErrorCode::kCollinearCurves) throw;
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

namespace {

// Union of the cells left of x_i: the curve x_i, then back along the top,
// down the left side and along the bottom.
Polygon left_of_curve(const StructuredQuadMesh& mesh, int i) {
  Polygon out;
  for (int j = 1; j <= mesh.N(); ++j) out.push_back(mesh.vertex(i, j));
  for (int k = i - 1; k >= 1; --k) out.push_back(mesh.vertex(k, mesh.N()));
  for (int j = mesh.N() - 1; j >= 1; --j) out.push_back(mesh.vertex(1, j));
  for (int k = 2; k < i; ++k) out.push_back(mesh.vertex(k, 1));
  return out;
}

}  // namespace

long swap_polygon_count(int M, int N, int ns_xx, int ns_yy) {
  const long m = M - 1;
  const long n = N - 1;
  return 3 * n * m - 2 * (m + n) + 1 + ns_xx + ns_yy;
}

CensusCheck census_check(const StructuredQuadMesh& old_mesh, const StructuredQuadMesh& new_mesh) {
  CensusCheck check;
  const AssumptionReport report = validate_assumptions(old_mesh, new_mesh);
  const SwapSweep sweep = sweep_swap_regions(old_mesh, new_mesh);
  check.enumerated = static_cast<long>(sweep.polygons.size());
  check.strip_counts = sweep.vertical_strips;

  SingularPointCensus ns;
  bool collinear = false;
  try {
    ns = count_singular_points(old_mesh, new_mesh);
  } catch (const RemapError& e) {
    if (e.code() != ErrorCode::kCollinearCurves) throw;
    collinear = true;
  }
  check.ns_xx = ns.ns_xx;
  check.ns_yy = ns.ns_yy;
  check.applicable = report.counting_hypotheses() && !collinear;
  if (!check.applicable) {
    check.note = collinear ? "corresponding grid curves overlap"
                           : "assumptions or no-common-edge hypothesis fail";
  }
  check.expected = swap_polygon_count(old_mesh.M(), old_mesh.N(), ns.ns_xx, ns.ns_yy);
  check.count_matches = check.enumerated == check.expected;

  std::vector<int> per_strip(static_cast<std::size_t>(std::max(0, old_mesh.M() - 2)), 0);
  for (const auto& p : ns.points) {
    if (p.family == EdgeFamily::kVertical) ++per_strip[static_cast<std::size_t>(p.curve - 2)];
  }
  // A y-curve crossing inside the lens between x_i^a and x_i^b adds a piece
  // to that strip as well.
  for (int i = 2; i < old_mesh.M(); ++i) {
    const Polygon left_a = left_of_curve(old_mesh, i);
    const Polygon left_b = left_of_curve(new_mesh, i);
    for (const auto& p : ns.points) {
      if (p.family != EdgeFamily::kHorizontal) continue;
      const Containment a = locate_point(left_a, p.point);
      const Containment b = locate_point(left_b, p.point);
      if (a == Containment::kBoundary || b == Containment::kBoundary) continue;
      if ((a == Containment::kInside) != (b == Containment::kInside)) {
        ++per_strip[static_cast<std::size_t>(i - 2)];
      }
    }
  }
  check.strips_match = true;
  for (std::size_t s = 0; s < per_strip.size(); ++s) {
    const int expected = 2 * (old_mesh.N() - 1) - 1 + per_strip[s];
    check.strip_expected.push_back(expected);
    if (s >= check.strip_counts.size() || check.strip_counts[s] != expected) {
      check.strips_match = false;
    }
  }
  return check;
}

void write_swap_polygons_csv(std::ostream& os, std::span<const SwapPolygon> polygons) {
  os << "i_new,j_new,i_old,j_old,kind,area,vertices\n";
  for (const auto& p : polygons) {
    std::string wkt = "\"POLYGON((";
    for (std::size_t k = 0; k <= p.polygon.size(); ++k) {
      const Point2 v = p.polygon[k % p.polygon.size()];
      if (k > 0) wkt += ", ";
      wkt += format_real(v.x) + " " + format_real(v.y);
    }
    wkt += "))\"";
    for (SwapKind kind : {SwapKind::kInvading, SwapKind::kOccupied}) {
      os << p.owner_new.i << ',' << p.owner_new.j << ',' << p.owner_old.i << ',' << p.owner_old.j
         << ',' << swap_kind_name(kind) << ',' << format_real(p.area) << ',' << wkt << '\n';
    }
  }
}

}  // namespace quadremap
