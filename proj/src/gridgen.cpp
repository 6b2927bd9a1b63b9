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

#include "quadremap/gridgen.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "quadremap/error.hpp"

namespace quadremap {

namespace {

double lattice(int k, int n) { return static_cast<double>(k - 1) / static_cast<double>(n - 1); }

// Fixed conversion (rather than std::uniform_real_distribution) so the
// sequence is identical across standard libraries.
double centered_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
}

}  // namespace

double tensor_alpha(double t) { return 0.5 * std::sin(4.0 * std::numbers::pi * t); }

StructuredQuadMesh tensor_grid(int nx, int ny, double t, bool rescale) {
  if (nx < 2 || ny < 2) {
    throw RemapError(ErrorCode::kDimensionMismatch, "tensor grid needs nx, ny >= 2");
  }
  const double alpha = tensor_alpha(t);
  if (std::abs(1.0 - alpha) <= kGeomEps) {
    throw RemapError(ErrorCode::kDegenerateAlpha, "1 - alpha(t) vanishes at t=" + format_real(t));
  }
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int j = 1; j <= ny; ++j) {
    const double eta = lattice(j, ny);
    // (1-a) eta^2 / (1-a) is eta^2; evaluate it directly to keep it exact.
    const double y = rescale ? eta * eta : (1.0 - alpha) * eta * eta;
    for (int i = 1; i <= nx; ++i) {
      const double xi = lattice(i, nx);
      pts.push_back({(1.0 - alpha) * xi + alpha * xi * xi * xi, y});
    }
  }
  return StructuredQuadMesh(nx, ny, std::move(pts));
}

MeshPair tensor_pair(int nx, int ny, bool rescale) {
  const double t1 = 1.0 / (320.0 + nx);
  const double t2 = 2.0 * t1;
  return {tensor_grid(nx, ny, t1, rescale), tensor_grid(nx, ny, t2, rescale)};
}

StructuredQuadMesh random_grid(int nx, double gamma, std::uint64_t seed, std::uint32_t stream) {
  if (!(gamma >= 0.0 && gamma < 0.5)) {
    throw RemapError(ErrorCode::kInvalidGamma, "gamma must lie in [0, 0.5), got " + format_real(gamma));
  }
  if (nx < 3) throw RemapError(ErrorCode::kDimensionMismatch, "random grid needs nx >= 3");
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream};
  std::mt19937_64 gen(seq);
  const double h = 1.0 / static_cast<double>(nx - 1);
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(nx));
  for (int j = 1; j <= nx; ++j) {
    for (int i = 1; i <= nx; ++i) {
      Point2 p{lattice(i, nx), lattice(j, nx)};
      if (i > 1 && i < nx && j > 1 && j < nx) {
        const double r = centered_unit(gen);
        const double rp = centered_unit(gen);
        p.x += gamma * r * h;
        p.y += gamma * rp * h;
      }
      pts.push_back(p);
    }
  }
  return StructuredQuadMesh(nx, nx, std::move(pts));
}

MeshPair random_pair(int nx, std::uint64_t seed) {
  return {random_grid(nx, kOldGamma, seed, 0), random_grid(nx, kNewGamma, seed, 1)};
}

}  // namespace quadremap
