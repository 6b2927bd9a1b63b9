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

#include <gtest/gtest.h>

#include <cmath>

#include "quadremap/error.hpp"
#include "quadremap/fields.hpp"
#include "quadremap/gridgen.hpp"
#include "quadremap/swept.hpp"
#include "support.hpp"

namespace qr = quadremap;
namespace qt = quadremap::testing;
using qr::DensityKind;

namespace {

// Franke written term by term in a different association order.
double franke_ref(double x, double y) {
  const double t1 = 0.75 * std::exp(-(std::pow(9 * x - 2, 2) + std::pow(9 * y - 2, 2)) / 4);
  const double t2 = 0.75 * std::exp(-std::pow(9 * x + 1, 2) / 49 - (9 * y + 1) / 10);
  const double t3 = 0.5 * std::exp(-(std::pow(9 * x - 7, 2) + std::pow(9 * y - 3, 2)) / 4);
  const double t4 = -0.2 * std::exp(-std::pow(9 * x - 4, 2) - std::pow(9 * y - 7, 2));
  return t4 + (t3 + (t2 + t1));
}

TEST(Density, Examples) {
  EXPECT_EQ(qr::eval_density(DensityKind::kPeak, 0.5, 0.5), 1.0);
  EXPECT_EQ(qr::eval_density(DensityKind::kPeak, 0.0, 0.0), 0.0);
  EXPECT_NEAR(qr::eval_density(DensityKind::kPeak, 0.5, 0.5 + 0.2499999), 0.001, 1e-12);
  EXPECT_NEAR(qr::eval_density(DensityKind::kTanh, 0.4, 0.0), 1.2, 1e-15);
  EXPECT_NEAR(qr::eval_density(DensityKind::kFranke, 0.0, 0.0), 0.766419, 1e-5);
  EXPECT_EQ(qr::eval_density(DensityKind::kUniform, 0.3, 0.9), 1.0);
}

TEST(Density, FrankeMatchesReference) {
  for (int b = 0; b <= 50; ++b) {
    for (int a = 0; a <= 50; ++a) {
      const double x = a / 50.0;
      const double y = b / 50.0;
      const double v = qr::eval_density(DensityKind::kFranke, x, y);
      EXPECT_NEAR(v, franke_ref(x, y), 4 * std::numeric_limits<double>::epsilon() * 1.5);
    }
  }
}

TEST(Density, PeakNonnegative) {
  for (int k = 0; k <= 10000; ++k) {
    const double x = (k % 101) / 100.0;
    const double y = (k / 101) / 100.0;
    EXPECT_GE(qr::eval_density(DensityKind::kPeak, x, y), 0.0);
  }
}

TEST(Density, ParseNames) {
  EXPECT_EQ(qr::parse_density_kind("tanh"), DensityKind::kTanh);
  EXPECT_EQ(qr::density_name(DensityKind::kPeak), "peak");
  try {
    qr::parse_density_kind("gauss");
    FAIL();
  } catch (const qr::RemapError& e) {
    EXPECT_EQ(e.code(), qr::ErrorCode::kUnknownKind);
  }
}

TEST(CellMasses, UniformDensity) {
  const auto m = qt::uniform_mesh(11, 11);
  const auto f = qr::init_cell_masses(m, DensityKind::kUniform);
  for (double mass : f.masses) EXPECT_NEAR(mass, 0.01, 1e-16);  // h^2 up to vertex rounding
}

TEST(CellMasses, LinearDensityOneCell) {
  const auto m = qt::uniform_mesh(2, 2);
  const auto f = qr::init_cell_masses(m, [](double x, double) { return x; });
  EXPECT_NEAR(f.masses[0], 0.5, 1e-15);
}

TEST(CellMasses, CubicsExactOnParallelograms) {
  // Sheared grid: every cell is a parallelogram.
  std::vector<qr::Point2> pts;
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i < 6; ++i) pts.push_back({i * 0.2 + j * 0.07, j * 0.2 + i * 0.03});
  }
  const qr::StructuredQuadMesh m(6, 6, pts);
  auto f = [](double x, double y) { return 1 + x - 2 * y + x * y + 3 * x * x * y - y * y * y; };
  const auto masses = qr::init_cell_masses(m, f);
  for (int k = 0; k < m.num_cells(); ++k) {
    const double ref = qt::refine_integral(m.cell(m.cell_at(k)), f, 1e-15);
    EXPECT_NEAR(masses.masses[static_cast<std::size_t>(k)], ref, 1e-14 * std::abs(ref) + 1e-16);
  }
}

double franke_total_error(int nx) {
  const auto m = qr::tensor_pair(nx, nx).first;
  const auto masses = qr::init_cell_masses(m, DensityKind::kFranke);
  double total = 0.0, ref = 0.0;
  for (int k = 0; k < m.num_cells(); ++k) {
    total += masses.masses[static_cast<std::size_t>(k)];
    ref += qt::refine_integral(m.cell(m.cell_at(k)),
                               [](double x, double y) {
                                 return qr::eval_density(DensityKind::kFranke, x, y);
                               },
                               1e-13);
  }
  return std::abs(total - ref);
}

TEST(CellMasses, FrankeTotalMatchesRefinement) {
  // The 3x3 rule is off by a few 1e-6 on the coarse tensor grid and
  // converges like h^6.
  const double coarse = franke_total_error(11);
  const double fine = franke_total_error(41);
  EXPECT_LE(coarse, 5e-6);
  EXPECT_LE(fine, 1e-8);
  EXPECT_LT(fine, coarse / 1000);
}

TEST(ErrorNorms, UniformIsExact) {
  const auto p = qr::random_pair(11, 3);
  const auto old_masses = qr::init_cell_masses(p.first, DensityKind::kUniform).masses;
  const auto r = qr::remap_fb(p.first, p.second, old_masses);
  const auto n = qr::error_norms(r.masses, DensityKind::kUniform, p.second);
  EXPECT_LE(n.linf_density, 1e-13);
  EXPECT_LE(n.linf_mass, 1e-13);
}

TEST(ErrorNorms, IdentityRemapKeepsReconstructionError) {
  const auto m = qr::random_grid(11, 0.4, 3);
  const auto old_masses = qr::init_cell_masses(m, DensityKind::kFranke).masses;
  const auto before = qr::error_norms(old_masses, DensityKind::kFranke, m);
  EXPECT_GT(before.linf_density, 0.0);
  const auto r = qr::remap_fb(m, m, old_masses);
  const auto after = qr::error_norms(r.masses, DensityKind::kFranke, m);
  EXPECT_NEAR(after.linf_density, before.linf_density, 1e-14);
  EXPECT_NEAR(after.linf_mass, before.linf_mass, 1e-14);
}

TEST(ErrorNorms, MatchesDirectDefinition) {
  const auto m = qt::uniform_mesh(4, 4);
  std::vector<double> masses(9, 0.0);
  for (std::size_t k = 0; k < 9; ++k) masses[k] = 0.1 * static_cast<double>(k) / 9.0;
  const auto n = qr::error_norms(masses, DensityKind::kTanh, m);
  double ld = 0.0, lm = 0.0;
  for (int k = 0; k < 9; ++k) {
    const auto c = m.cell(m.cell_at(k));
    const double cx = (c[0].x + c[1].x + c[2].x + c[3].x) / 4;
    const double cy = (c[0].y + c[1].y + c[2].y + c[3].y) / 4;
    const double area = 1.0 / 9.0;
    const double e = masses[static_cast<std::size_t>(k)] / area - (std::tanh(cy - 15 * cx + 6) + 1.2);
    ld = std::max(ld, std::abs(e));
    lm = std::max(lm, std::abs(e) * area);
  }
  EXPECT_NEAR(n.linf_density, ld, 1e-13);
  EXPECT_NEAR(n.linf_mass, lm, 1e-14);
}

}  // namespace
