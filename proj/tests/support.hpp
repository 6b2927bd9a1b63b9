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

// Independent test oracles. Nothing here calls into the library geometry, so a
// shared bug cannot make a test and the code agree by accident.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "quadremap/mesh.hpp"

namespace quadremap::testing {

/// Winding number of p with respect to a closed loop (0 outside).
inline int winding_number(const std::vector<Point2>& poly, Point2 p) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 a = poly[k];
    const Point2 b = poly[(k + 1) % n];
    const double side = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++wn;
    } else if (b.y <= p.y && side < 0) {
      --wn;
    }
  }
  return wn;
}

inline bool inside(const std::vector<Point2>& poly, Point2 p) { return winding_number(poly, p) != 0; }

/// Plain shoelace in textbook order.
inline double shoelace(const std::vector<Point2>& poly) {
  double s = 0.0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point2 a = poly[k];
    const Point2 b = poly[(k + 1) % poly.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

/// Midpoint-rule area of the region where `pred` holds inside a box.
inline double raster_area(const std::function<bool(Point2)>& pred, double x0, double y0,
                          double x1, double y1, double step) {
  const int nx = static_cast<int>(std::ceil((x1 - x0) / step));
  const int ny = static_cast<int>(std::ceil((y1 - y0) / step));
  const double dx = (x1 - x0) / nx;
  const double dy = (y1 - y0) / ny;
  long hits = 0;
  for (int b = 0; b < ny; ++b) {
    for (int a = 0; a < nx; ++a) {
      if (pred({x0 + (a + 0.5) * dx, y0 + (b + 0.5) * dy})) ++hits;
    }
  }
  return static_cast<double>(hits) * dx * dy;
}

inline std::vector<Point2> as_poly(const std::array<Point2, 4>& q) { return {q.begin(), q.end()}; }

/// Uniform M x N vertex mesh on [0,1]^2.
inline StructuredQuadMesh uniform_mesh(int M, int N) {
  std::vector<Point2> pts;
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < M; ++i) {
      pts.push_back({static_cast<double>(i) / (M - 1), static_cast<double>(j) / (N - 1)});
    }
  }
  return StructuredQuadMesh(M, N, std::move(pts));
}

/// Copy of `mesh` with vertex (i,j) replaced.
inline StructuredQuadMesh moved(const StructuredQuadMesh& mesh, int i, int j, Point2 p) {
  std::vector<Point2> pts = mesh.vertices();
  pts[static_cast<std::size_t>((j - 1) * mesh.M() + (i - 1))] = p;
  return StructuredQuadMesh(mesh.M(), mesh.N(), std::move(pts));
}

/// Uniform mesh with every interior vertex jittered by at most amp*h per
/// coordinate. Small amplitudes keep every cell convex.
inline StructuredQuadMesh jittered_mesh(int n, double amp, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-amp, amp);
  const double h = 1.0 / (n - 1);
  std::vector<Point2> pts;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      Point2 p{(i - 1) * h, (j - 1) * h};
      if (i > 1 && i < n && j > 1 && j < n) {
        p.x += u(rng) * h;
        p.y += u(rng) * h;
      }
      pts.push_back(p);
    }
  }
  return StructuredQuadMesh(n, n, std::move(pts));
}

/// Area of the intersection of two convex polygons by half-plane clipping,
/// written independently of the library clipper (different loop structure,
/// no tolerance).
inline double convex_overlap_area(std::vector<Point2> subject, const std::vector<Point2>& clip) {
  const std::size_t m = clip.size();
  for (std::size_t e = 0; e < m && !subject.empty(); ++e) {
    const Point2 a = clip[e];
    const Point2 b = clip[(e + 1) % m];
    auto side = [&](Point2 p) { return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x); };
    std::vector<Point2> out;
    for (std::size_t k = 0; k < subject.size(); ++k) {
      const Point2 p = subject[k];
      const Point2 q = subject[(k + 1) % subject.size()];
      const double sp = side(p);
      const double sq = side(q);
      if (sp >= 0) out.push_back(p);
      if ((sp >= 0) != (sq >= 0)) {
        const double t = sp / (sp - sq);
        out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
    subject = std::move(out);
  }
  return subject.size() < 3 ? 0.0 : shoelace(subject);
}

/// Integral of f over a quadrilateral by recursive 2x2 subdivision of the
/// bilinear map with the midpoint rule, refined until the change is below tol.
inline double refine_integral(const std::array<Point2, 4>& q,
                              const std::function<double(double, double)>& f, double tol) {
  auto eval = [&](int n) {
    double s = 0.0;
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const double u = (a + 0.5) / n;
        const double v = (b + 0.5) / n;
        const double x = (1 - u) * (1 - v) * q[0].x + u * (1 - v) * q[1].x + u * v * q[2].x +
                         (1 - u) * v * q[3].x;
        const double y = (1 - u) * (1 - v) * q[0].y + u * (1 - v) * q[1].y + u * v * q[2].y +
                         (1 - u) * v * q[3].y;
        const double xu = (1 - v) * (q[1].x - q[0].x) + v * (q[2].x - q[3].x);
        const double xv = (1 - u) * (q[3].x - q[0].x) + u * (q[2].x - q[1].x);
        const double yu = (1 - v) * (q[1].y - q[0].y) + v * (q[2].y - q[3].y);
        const double yv = (1 - u) * (q[3].y - q[0].y) + u * (q[2].y - q[1].y);
        s += f(x, y) * (xu * yv - xv * yu);
      }
    }
    return s / (static_cast<double>(n) * n);
  };
  // Romberg table over midpoint sums; the error expansion is even in 1/n.
  std::vector<double> prev{eval(2)};
  for (int n = 4; n <= 512; n *= 2) {
    std::vector<double> row{eval(n)};
    for (std::size_t k = 1; k <= prev.size(); ++k) {
      row.push_back(row[k - 1] + (row[k - 1] - prev[k - 1]) / (std::pow(4.0, double(k)) - 1.0));
    }
    if (std::abs(row.back() - prev.back()) < tol) return row.back();
    prev = std::move(row);
  }
  return prev.back();
}

/// Uniform n x n old mesh and a new mesh whose interior vertices move by
/// fixed-sign offsets, except column `cross_col` whose x offset changes sign
/// once between rows n/2 and n/2+1. Boundary vertices stay put, so x_c^a and
/// x_c^b cross exactly once and every other curve pair is crossing-free.
inline std::pair<StructuredQuadMesh, StructuredQuadMesh> crossing_strip_pair(int n,
                                                                             int cross_col) {
  const auto old_mesh = uniform_mesh(n, n);
  const double h = 1.0 / (n - 1);
  std::vector<Point2> pts = old_mesh.vertices();
  for (int j = 2; j < n; ++j) {
    for (int i = 2; i < n; ++i) {
      Point2& p = pts[static_cast<std::size_t>((j - 1) * n + (i - 1))];
      double dx = (0.15 + 0.05 * ((i * 7 + j * 3) % 5) / 4.0) * h;
      if (i == cross_col && j > n / 2) dx = -dx;
      p.x += dx;
      p.y += (0.11 + 0.04 * ((i * 5 + j) % 3) / 2.0) * h;
    }
  }
  return {old_mesh, StructuredQuadMesh(n, n, std::move(pts))};
}

}  // namespace quadremap::testing
