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

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "quadremap/mesh.hpp"

namespace quadremap {

enum class DensityKind { kFranke, kTanh, kPeak, kUniform };

/// Accepts "franke", "tanh", "peak", "uniform"; otherwise UnknownKind.
DensityKind parse_density_kind(std::string_view name);
std::string_view density_name(DensityKind kind);

double eval_density(DensityKind kind, double x, double y);

struct CellMassField {
  std::vector<double> masses;  // row-major cell order, i fastest
  std::vector<double> areas;

  double density(std::size_t k) const { return masses[k] / areas[k]; }
  std::vector<double> densities() const;
};

/// 3x3 Gauss-Legendre rule on the bilinear image of the reference square.
double integrate_cell(const std::array<Point2, 4>& cell,
                      const std::function<double(double, double)>& f);

CellMassField init_cell_masses(const StructuredQuadMesh& mesh, DensityKind kind);
CellMassField init_cell_masses(const StructuredQuadMesh& mesh,
                               const std::function<double(double, double)>& f);

/// Vertex average, used as the cell center in the error norms.
Point2 cell_center(const std::array<Point2, 4>& cell);

struct ErrorNorms {
  double linf_density = 0.0;
  double linf_mass = 0.0;
};

/// Max over new cells of |rho_h - rho(center)| and |(rho_h - rho(center)) * area|.
ErrorNorms error_norms(std::span<const double> new_masses, DensityKind kind,
                       const StructuredQuadMesh& new_mesh);

}  // namespace quadremap
