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

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace quadremap {

/// Coincidence tolerance in domain units. Meshes are expected to live on a
/// domain of diameter O(1) with cell sizes well above this value.
inline constexpr double kGeomEps = 1e-12;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

struct Segment {
  Point2 a;
  Point2 b;
};

/// Ordered vertex loop; the closing edge back to the first vertex is implied.
using Polygon = std::vector<Point2>;

inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Twice the signed area of triangle abc (positive when counterclockwise).
inline double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

bool is_finite(Point2 p);

/// Shoelace signed area. Valid for any vertex count, including repeated and
/// collinear vertices; reversing the loop negates the result exactly.
double signed_area(std::span<const Point2> poly);

Polygon reversed(std::span<const Point2> poly);

enum class IntersectionKind { kEmpty, kPoint, kCollinearOverlap };

struct IntersectionResult {
  IntersectionKind kind = IntersectionKind::kEmpty;
  Point2 point;       // kPoint
  double t = 0.0;     // parameter along the first segment
  double u = 0.0;     // parameter along the second segment
  Segment overlap;    // kCollinearOverlap, oriented along the first segment
  double overlap_t0 = 0.0, overlap_t1 = 0.0;  // overlap span on the first segment
  double overlap_u0 = 0.0, overlap_u1 = 0.0;  // same endpoints on the second segment
  bool at_endpoint_first = false;   // point within kGeomEps of an endpoint of s1
  bool at_endpoint_second = false;  // point within kGeomEps of an endpoint of s2

  bool proper() const {
    return kind == IntersectionKind::kPoint && !at_endpoint_first && !at_endpoint_second;
  }
};

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2);

double distance_to_segment(Point2 p, const Segment& s);

enum class Containment { kOutside, kBoundary, kInside };

/// Crossing-number test; points within `tol` of an edge report kBoundary.
Containment locate_point(std::span<const Point2> poly, Point2 p, double tol = kGeomEps);

/// Largest (over edges) negative signed distance: > 0 means p is strictly
/// inside the convex polygon by that margin. Used to break ties between
/// neighbouring cells for points that sit on a shared edge.
double inside_margin(std::span<const Point2> poly, Point2 p);

/// A point strictly inside a simple polygon of positive |area|, found by
/// intersecting a horizontal scanline through the widest vertex-free band.
Point2 interior_point(std::span<const Point2> poly);

/// Sutherland-Hodgman clip of two convex counterclockwise polygons.
Polygon clip_convex(std::span<const Point2> subject, std::span<const Point2> clip);

bool is_convex_ccw(std::span<const Point2> poly);

/// Split a simple polygon along every chord that `cut` draws through its
/// interior. Orientation is preserved; the chord is shared by both sides, so
/// the shoelace areas of the parts sum to the area of the input.
std::vector<Polygon> split_by_segment(const Polygon& poly, const Segment& cut);

/// Splits every polygon of `pieces` by every segment of `cuts`.
std::vector<Polygon> split_by_segments(std::vector<Polygon> pieces, std::span<const Segment> cuts);

/// Drops consecutive duplicates (and a trailing copy of the first vertex).
Polygon remove_repeated(std::span<const Point2> poly, double tol = kGeomEps);

/// Polygons whose |area| is at most kGeomEps times their perimeter are
/// treated as slivers of zero width.
bool is_degenerate_area(std::span<const Point2> poly, double area);

struct BoundingBox {
  double xmin, ymin, xmax, ymax;
  bool overlaps(const BoundingBox& o, double tol = kGeomEps) const {
    return xmin <= o.xmax + tol && o.xmin <= xmax + tol && ymin <= o.ymax + tol &&
           o.ymin <= ymax + tol;
  }
};
BoundingBox bounding_box(std::span<const Point2> pts);

}  // namespace quadremap
