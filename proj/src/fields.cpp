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

#include "quadremap/fields.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quadremap/error.hpp"

namespace quadremap {

DensityKind parse_density_kind(std::string_view name) {
  if (name == "franke") return DensityKind::kFranke;
  if (name == "tanh") return DensityKind::kTanh;
  if (name == "peak") return DensityKind::kPeak;
  if (name == "uniform") return DensityKind::kUniform;
  throw RemapError(ErrorCode::kUnknownKind, "unknown density '" + std::string(name) + "'");
}

std::string_view density_name(DensityKind kind) {
  switch (kind) {
    case DensityKind::kFranke: return "franke";
    case DensityKind::kTanh: return "tanh";
    case DensityKind::kPeak: return "peak";
    case DensityKind::kUniform: return "uniform";
  }
  return "unknown";
}

double eval_density(DensityKind kind, double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw RemapError(ErrorCode::kNonFinite, "density evaluated at non-finite point");
  }
  switch (kind) {
    case DensityKind::kFranke: {
      const double a = 9.0 * x;
      const double b = 9.0 * y;
      return 0.75 * std::exp(-((a - 2.0) * (a - 2.0) + (b - 2.0) * (b - 2.0)) / 4.0) +
             0.75 * std::exp(-(a + 1.0) * (a + 1.0) / 49.0 - (b + 1.0) / 10.0) +
             0.5 * std::exp(-((a - 7.0) * (a - 7.0) + (b - 3.0) * (b - 3.0)) / 4.0) -
             0.2 * std::exp(-(a - 4.0) * (a - 4.0) - (b - 7.0) * (b - 7.0));
    }
    case DensityKind::kTanh:
      return std::tanh(y - 15.0 * x + 6.0) + 1.2;
    case DensityKind::kPeak: {
      const double r = std::hypot(x - 0.5, y - 0.5);
      if (r > 0.25) return 0.0;
      return std::max(0.001, 4.0 * (0.25 - r));
    }
    case DensityKind::kUniform:
      return 1.0;
  }
  throw RemapError(ErrorCode::kUnknownKind, "unknown density kind");
}

std::vector<double> CellMassField::densities() const {
  std::vector<double> out(masses.size());
  for (std::size_t k = 0; k < masses.size(); ++k) out[k] = density(k);
  return out;
}

double integrate_cell(const std::array<Point2, 4>& c,
                      const std::function<double(double, double)>& f) {
  // Nodes and weights on [0,1].
  static const double s = std::sqrt(0.6);
  const double nodes[3] = {0.5 * (1.0 - s), 0.5, 0.5 * (1.0 + s)};
  const double weights[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  double sum = 0.0;
  for (int b = 0; b < 3; ++b) {
    const double v = nodes[b];
    for (int a = 0; a < 3; ++a) {
      const double u = nodes[a];
      const double n0 = (1 - u) * (1 - v);
      const double n1 = u * (1 - v);
      const double n2 = u * v;
      const double n3 = (1 - u) * v;
      const double x = n0 * c[0].x + n1 * c[1].x + n2 * c[2].x + n3 * c[3].x;
      const double y = n0 * c[0].y + n1 * c[1].y + n2 * c[2].y + n3 * c[3].y;
      // d(x,y)/du and d(x,y)/dv of the bilinear map
      const Point2 du = (1 - v) * (c[1] - c[0]) + v * (c[2] - c[3]);
      const Point2 dv = (1 - u) * (c[3] - c[0]) + u * (c[2] - c[1]);
      sum += weights[a] * weights[b] * cross(du, dv) * f(x, y);
    }
  }
  return sum;
}

CellMassField init_cell_masses(const StructuredQuadMesh& mesh,
                               const std::function<double(double, double)>& f) {
  CellMassField field;
  field.masses.reserve(static_cast<std::size_t>(mesh.num_cells()));
  field.areas.reserve(static_cast<std::size_t>(mesh.num_cells()));
  for (int k = 0; k < mesh.num_cells(); ++k) {
    const auto c = mesh.cell(mesh.cell_at(k));
    field.masses.push_back(integrate_cell(c, f));
    field.areas.push_back(signed_area(c));
  }
  return field;
}

CellMassField init_cell_masses(const StructuredQuadMesh& mesh, DensityKind kind) {
  return init_cell_masses(mesh, [kind](double x, double y) { return eval_density(kind, x, y); });
}

Point2 cell_center(const std::array<Point2, 4>& c) {
  return {0.25 * (c[0].x + c[1].x + c[2].x + c[3].x), 0.25 * (c[0].y + c[1].y + c[2].y + c[3].y)};
}

ErrorNorms error_norms(std::span<const double> new_masses, DensityKind kind,
                       const StructuredQuadMesh& new_mesh) {
  if (new_masses.size() != static_cast<std::size_t>(new_mesh.num_cells())) {
    throw RemapError(ErrorCode::kDimensionMismatch, "mass count does not match new mesh");
  }
  ErrorNorms norms;
  for (int k = 0; k < new_mesh.num_cells(); ++k) {
    const auto c = new_mesh.cell(new_mesh.cell_at(k));
    const double area = signed_area(c);
    const Point2 center = cell_center(c);
    const double diff = new_masses[k] / area - eval_density(kind, center.x, center.y);
    norms.linf_density = std::max(norms.linf_density, std::abs(diff));
    norms.linf_mass = std::max(norms.linf_mass, std::abs(diff * area));
  }
  return norms;
}

}  // namespace quadremap
