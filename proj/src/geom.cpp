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

#include "quadremap/geom.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "quadremap/error.hpp"

namespace quadremap {

namespace {

bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

void require_finite(std::span<const Point2> pts) {
  for (const auto& p : pts) {
    if (!is_finite(p)) throw RemapError(ErrorCode::kNonFinite, "non-finite coordinate");
  }
}

}  // namespace

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double signed_area(std::span<const Point2> poly) {
  require_finite(poly);
  const std::size_t n = poly.size();
  if (n < 3) return 0.0;

  // Edge terms are accumulated in a canonical (direction-free) order so that
  // rotating or reversing the loop yields exactly the same or negated sum.
  struct Term {
    Point2 lo, hi;
    int weight;
  };
  std::vector<Term> terms;
  terms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 p = poly[k];
    const Point2 q = poly[(k + 1) % n];
    if (p == q) continue;
    if (lex_less(p, q)) {
      terms.push_back({p, q, +1});
    } else {
      terms.push_back({q, p, -1});
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.lo != b.lo) return lex_less(a.lo, b.lo);
    return lex_less(a.hi, b.hi);
  });

  double sum = 0.0;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t m = k;
    int weight = 0;
    while (m < terms.size() && terms[m].lo == terms[k].lo && terms[m].hi == terms[k].hi) {
      weight += terms[m].weight;
      ++m;
    }
    if (weight != 0) {
      const double c = terms[k].lo.x * terms[k].hi.y - terms[k].lo.y * terms[k].hi.x;
      sum += weight * c;
    }
    k = m;
  }
  return 0.5 * sum;
}

Polygon reversed(std::span<const Point2> poly) { return Polygon(poly.rbegin(), poly.rend()); }

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2) {
  if (!is_finite(s1.a) || !is_finite(s1.b) || !is_finite(s2.a) || !is_finite(s2.b)) {
    throw RemapError(ErrorCode::kNonFinite, "non-finite segment coordinate");
  }
  constexpr double eps = kGeomEps;
  IntersectionResult r;
  const Point2 d1 = s1.b - s1.a;
  const Point2 d2 = s2.b - s2.a;
  const double len1 = norm(d1);
  const double len2 = norm(d2);

  // Zero-length segments degrade to point-on-segment tests.
  if (len1 <= eps || len2 <= eps) {
    const bool first_is_point = len1 <= eps;
    const Point2 p = first_is_point ? s1.a : s2.a;
    const Segment& other = first_is_point ? s2 : s1;
    if (distance_to_segment(p, other) > eps) return r;
    const Point2 od = other.b - other.a;
    const double olen = norm(od);
    const double param =
        olen <= eps ? 0.0 : std::clamp(dot(p - other.a, od) / (olen * olen), 0.0, 1.0);
    const bool at_end = param * olen <= eps || (1.0 - param) * olen <= eps;
    r.kind = IntersectionKind::kPoint;
    r.point = p;
    if (first_is_point) {
      r.t = 0.0;
      r.u = param;
      r.at_endpoint_first = true;
      r.at_endpoint_second = at_end;
    } else {
      r.t = param;
      r.u = 0.0;
      r.at_endpoint_first = at_end;
      r.at_endpoint_second = true;
    }
    return r;
  }

  // Signed distances of each segment's endpoints from the other's line.
  const double da = cross(d1, s2.a - s1.a) / len1;
  const double db = cross(d1, s2.b - s1.a) / len1;
  const double dc = cross(d2, s1.a - s2.a) / len2;
  const double dd = cross(d2, s1.b - s2.a) / len2;

  const bool collinear =
      (std::abs(da) <= eps && std::abs(db) <= eps) || (std::abs(dc) <= eps && std::abs(dd) <= eps);
  if (collinear) {
    const double inv = 1.0 / (len1 * len1);
    const double ta = dot(s2.a - s1.a, d1) * inv;
    const double tb = dot(s2.b - s1.a, d1) * inv;
    const double lo = std::max(0.0, std::min(ta, tb));
    const double hi = std::min(1.0, std::max(ta, tb));
    const double span_len = (hi - lo) * len1;
    if (span_len < -eps) return r;
    auto snap = [&](double t) -> Point2 {
      if (t == 0.0) return s1.a;
      if (t == 1.0) return s1.b;
      return t == ta ? s2.a : s2.b;
    };
    auto param_on_second = [&](Point2 p) {
      return std::clamp(dot(p - s2.a, d2) / (len2 * len2), 0.0, 1.0);
    };
    if (span_len <= eps) {
      r.kind = IntersectionKind::kPoint;
      r.t = std::clamp(lo, 0.0, 1.0);
      r.point = snap(r.t == lo ? lo : r.t);
      r.u = param_on_second(r.point);
      r.at_endpoint_first = true;
      r.at_endpoint_second = true;
      return r;
    }
    r.kind = IntersectionKind::kCollinearOverlap;
    r.overlap = {snap(lo), snap(hi)};
    r.overlap_t0 = lo;
    r.overlap_t1 = hi;
    r.overlap_u0 = param_on_second(r.overlap.a);
    r.overlap_u1 = param_on_second(r.overlap.b);
    return r;
  }

  if ((da > eps && db > eps) || (da < -eps && db < -eps)) return r;
  if ((dc > eps && dd > eps) || (dc < -eps && dd < -eps)) return r;

  r.kind = IntersectionKind::kPoint;
  r.t = std::clamp(dc / (dc - dd), 0.0, 1.0);
  r.u = std::clamp(da / (da - db), 0.0, 1.0);
  r.at_endpoint_first = std::abs(dc) <= eps || std::abs(dd) <= eps;
  r.at_endpoint_second = std::abs(da) <= eps || std::abs(db) <= eps;
  if (r.at_endpoint_first) {
    const bool start = std::abs(dc) <= std::abs(dd);
    r.t = start ? 0.0 : 1.0;
    r.point = start ? s1.a : s1.b;
    if (!r.at_endpoint_second) return r;
    r.u = std::abs(da) <= std::abs(db) ? 0.0 : 1.0;
    return r;
  }
  if (r.at_endpoint_second) {
    const bool start = std::abs(da) <= std::abs(db);
    r.u = start ? 0.0 : 1.0;
    r.point = start ? s2.a : s2.b;
    return r;
  }
  r.point = s1.a + r.t * d1;
  return r;
}

double distance_to_segment(Point2 p, const Segment& s) {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, s.a + t * d);
}

Containment locate_point(std::span<const Point2> poly, Point2 p, double tol) {
  const std::size_t n = poly.size();
  if (n == 0) return Containment::kOutside;
  for (std::size_t k = 0; k < n; ++k) {
    if (distance_to_segment(p, {poly[k], poly[(k + 1) % n]}) <= tol) return Containment::kBoundary;
  }
  bool inside = false;
  for (std::size_t k = 0, m = n - 1; k < n; m = k++) {
    const Point2 a = poly[k];
    const Point2 b = poly[m];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside ? Containment::kInside : Containment::kOutside;
}

double inside_margin(std::span<const Point2> poly, Point2 p) {
  const double orientation = signed_area(poly) >= 0.0 ? 1.0 : -1.0;
  double margin = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 a = poly[k];
    const Point2 b = poly[(k + 1) % n];
    const double len = distance(a, b);
    if (len == 0.0) continue;
    margin = std::min(margin, orientation * orient(a, b, p) / len);
  }
  return margin;
}

Point2 interior_point(std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  std::vector<double> ys;
  ys.reserve(n);
  for (const auto& p : poly) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  Point2 best{0.0, 0.0};
  double best_score = -1.0;
  std::vector<double> xs;
  for (std::size_t g = 0; g + 1 < ys.size(); ++g) {
    const double gap = ys[g + 1] - ys[g];
    const double y = 0.5 * (ys[g] + ys[g + 1]);
    xs.clear();
    for (std::size_t k = 0; k < n; ++k) {
      const Point2 a = poly[k];
      const Point2 b = poly[(k + 1) % n];
      if ((a.y < y) != (b.y < y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      const double width = xs[k + 1] - xs[k];
      const double score = std::min(gap, width);
      if (score > best_score) {
        best_score = score;
        best = {0.5 * (xs[k] + xs[k + 1]), y};
      }
    }
  }
  if (best_score < 0.0) {
    // Zero-height input: the vertex average is as good as anything.
    Point2 c{0.0, 0.0};
    for (const auto& p : poly) c = c + p;
    return n == 0 ? c : (1.0 / static_cast<double>(n)) * c;
  }
  return best;
}

bool is_convex_ccw(std::span<const Point2> poly) {
  const Polygon p = remove_repeated(poly);
  const std::size_t n = p.size();
  if (n < 3) return false;
  if (signed_area(p) <= 0.0) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 a = p[(k + n - 1) % n];
    const Point2 b = p[k];
    const Point2 c = p[(k + 1) % n];
    if (orient(a, b, c) < -kGeomEps * distance(a, b) * distance(b, c)) return false;
  }
  return true;
}

Polygon clip_convex(std::span<const Point2> subject, std::span<const Point2> clip) {
  require_finite(subject);
  require_finite(clip);
  if (!is_convex_ccw(subject) || !is_convex_ccw(clip)) {
    throw RemapError(ErrorCode::kNonConvexInput, "clip_convex requires convex counterclockwise input");
  }
  Polygon output = remove_repeated(subject);
  const Polygon window = remove_repeated(clip);
  for (std::size_t k = 0; k < window.size() && !output.empty(); ++k) {
    const Point2 c0 = window[k];
    const Point2 c1 = window[(k + 1) % window.size()];
    const Polygon input = std::move(output);
    output.clear();
    for (std::size_t m = 0; m < input.size(); ++m) {
      const Point2 s = input[m];
      const Point2 e = input[(m + 1) % input.size()];
      const double os = orient(c0, c1, s);
      const double oe = orient(c0, c1, e);
      if (oe >= 0.0) {
        if (os < 0.0) output.push_back(s + (os / (os - oe)) * (e - s));
        output.push_back(e);
      } else if (os >= 0.0) {
        output.push_back(s + (os / (os - oe)) * (e - s));
      }
    }
  }
  return remove_repeated(output);
}

Polygon remove_repeated(std::span<const Point2> poly, double tol) {
  Polygon out;
  out.reserve(poly.size());
  for (const auto& p : poly) {
    if (out.empty() || distance(out.back(), p) > tol) out.push_back(p);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= tol) out.pop_back();
  return out;
}

bool is_degenerate_area(std::span<const Point2> poly, double area) {
  double perimeter = 0.0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    perimeter += distance(poly[k], poly[(k + 1) % poly.size()]);
  }
  return std::abs(area) <= kGeomEps * perimeter;
}

BoundingBox bounding_box(std::span<const Point2> pts) {
  BoundingBox box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                  -std::numeric_limits<double>::infinity(),
                  -std::numeric_limits<double>::infinity()};
  for (const auto& p : pts) {
    box.xmin = std::min(box.xmin, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.xmax = std::max(box.xmax, p.x);
    box.ymax = std::max(box.ymax, p.y);
  }
  return box;
}

namespace {

struct ChordHit {
  double s;     // parameter along the cut
  int edge;     // polygon edge index
  Point2 point;
};

// Index of `hit` in the loop after inserting it, reusing coincident vertices.
std::pair<Polygon, std::array<std::size_t, 2>> insert_hits(const Polygon& poly,
                                                            const std::array<ChordHit, 2>& hits) {
  const std::size_t n = poly.size();
  Polygon aug;
  aug.reserve(n + 2);
  std::array<std::size_t, 2> index{n + 2, n + 2};
  std::array<int, 2> vertex_of{-1, -1};
  for (int h = 0; h < 2; ++h) {
    const int e = hits[h].edge;
    if (distance(hits[h].point, poly[e]) <= kGeomEps) {
      vertex_of[h] = e;
    } else if (distance(hits[h].point, poly[(e + 1) % n]) <= kGeomEps) {
      vertex_of[h] = static_cast<int>((e + 1) % n);
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    for (int h = 0; h < 2; ++h) {
      if (vertex_of[h] == static_cast<int>(e)) index[h] = aug.size();
    }
    aug.push_back(poly[e]);
    std::array<int, 2> order{0, 1};
    const double len = distance(poly[e], poly[(e + 1) % n]);
    auto along = [&](int h) { return len == 0.0 ? 0.0 : distance(poly[e], hits[h].point) / len; };
    if (along(1) < along(0)) std::swap(order[0], order[1]);
    for (int h : order) {
      if (vertex_of[h] < 0 && hits[h].edge == static_cast<int>(e)) {
        index[h] = aug.size();
        aug.push_back(hits[h].point);
      }
    }
  }
  return {std::move(aug), index};
}

}  // namespace

std::vector<Polygon> split_by_segment(const Polygon& poly, const Segment& cut) {
  Polygon p = remove_repeated(poly);
  const std::size_t n = p.size();
  if (n < 3) return {p};

  std::vector<ChordHit> hits;
  for (std::size_t e = 0; e < n; ++e) {
    const auto r = segment_intersection(cut, {p[e], p[(e + 1) % n]});
    if (r.kind == IntersectionKind::kPoint) {
      hits.push_back({r.t, static_cast<int>(e), r.point});
    } else if (r.kind == IntersectionKind::kCollinearOverlap) {
      hits.push_back({r.overlap_t0, static_cast<int>(e), r.overlap.a});
      hits.push_back({r.overlap_t1, static_cast<int>(e), r.overlap.b});
    }
  }
  if (hits.size() < 2) return {p};
  std::sort(hits.begin(), hits.end(), [](const ChordHit& a, const ChordHit& b) { return a.s < b.s; });

  for (std::size_t k = 0; k + 1 < hits.size(); ++k) {
    const ChordHit& a = hits[k];
    const ChordHit& b = hits[k + 1];
    if (distance(a.point, b.point) <= kGeomEps) continue;
    const Point2 mid = 0.5 * (a.point + b.point);
    if (locate_point(p, mid) != Containment::kInside) continue;

    auto [aug, index] = insert_hits(p, {a, b});
    std::size_t lo = std::min(index[0], index[1]);
    std::size_t hi = std::max(index[0], index[1]);
    if (lo == hi || hi >= aug.size()) continue;
    Polygon first(aug.begin() + static_cast<std::ptrdiff_t>(lo),
                  aug.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    Polygon second(aug.begin() + static_cast<std::ptrdiff_t>(hi), aug.end());
    second.insert(second.end(), aug.begin(), aug.begin() + static_cast<std::ptrdiff_t>(lo) + 1);

    std::vector<Polygon> out = split_by_segment(first, cut);
    std::vector<Polygon> rest = split_by_segment(second, cut);
    out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    return out;
  }
  return {p};
}

std::vector<Polygon> split_by_segments(std::vector<Polygon> pieces, std::span<const Segment> cuts) {
  for (const auto& cut : cuts) {
    const BoundingBox cut_box = bounding_box(std::array<Point2, 2>{cut.a, cut.b});
    std::vector<Polygon> next;
    next.reserve(pieces.size() + 2);
    for (auto& piece : pieces) {
      if (!cut_box.overlaps(bounding_box(piece))) {
        next.push_back(std::move(piece));
        continue;
      }
      auto parts = split_by_segment(piece, cut);
      next.insert(next.end(), std::make_move_iterator(parts.begin()),
                  std::make_move_iterator(parts.end()));
    }
    pieces = std::move(next);
  }
  return pieces;
}

}  // namespace quadremap
