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
#include <map>
#include <random>
#include <sstream>

#include "quadremap/error.hpp"
#include "quadremap/fields.hpp"
#include "quadremap/gridgen.hpp"
#include "quadremap/swap.hpp"
#include "quadremap/swept.hpp"
#include "support.hpp"

namespace qr = quadremap;
namespace qt = quadremap::testing;
using qr::CellIndex;
using qr::Point2;

namespace {

using PairKey = std::pair<CellIndex, CellIndex>;  // (old, new)

std::map<PairKey, double> areas_by_pair(const std::vector<qr::SwapPolygon>& polys) {
  std::map<PairKey, double> out;
  for (const auto& p : polys) out[{p.owner_old, p.owner_new}] += p.area;
  return out;
}

// Every off-diagonal overlap of old and new cells, by convex clipping.
std::map<PairKey, double> oracle_overlaps(const qr::StructuredQuadMesh& old_mesh,
                                          const qr::StructuredQuadMesh& new_mesh) {
  std::map<PairKey, double> out;
  for (int k = 0; k < new_mesh.num_cells(); ++k) {
    const CellIndex n = new_mesh.cell_at(k);
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        const CellIndex o{n.i + di, n.j + dj};
        if ((di == 0 && dj == 0) || !old_mesh.has_cell(o)) continue;
        const double a =
            qt::convex_overlap_area(qt::as_poly(old_mesh.cell(o)), qt::as_poly(new_mesh.cell(n)));
        if (a > 0.0) out[{o, n}] = a;
      }
    }
  }
  return out;
}

void expect_matches_oracle(const qr::StructuredQuadMesh& old_mesh,
                           const qr::StructuredQuadMesh& new_mesh, double tol) {
  const auto got = areas_by_pair(qr::sweep_swap_regions(old_mesh, new_mesh).polygons);
  const auto want = oracle_overlaps(old_mesh, new_mesh);
  for (const auto& [key, area] : want) {
    const auto it = got.find(key);
    const double g = it == got.end() ? 0.0 : it->second;
    EXPECT_NEAR(g, area, tol) << qr::to_string(key.first) << " -> " << qr::to_string(key.second);
  }
  for (const auto& [key, area] : got) {
    EXPECT_TRUE(want.count(key) || area <= tol) << qr::to_string(key.first);
  }
}

TEST(SwapSweep, IdenticalMeshes) {
  const auto m = qr::random_grid(8, 0.4, 1);
  EXPECT_TRUE(qr::sweep_swap_regions(m, m).polygons.empty());
}

TEST(SwapSweep, SingleVertexMoveMatchesClipping) {
  const auto old_mesh = qt::uniform_mesh(4, 4);
  const Point2 p = old_mesh.vertex(2, 2);
  const auto new_mesh = qt::moved(old_mesh, 2, 2, {p.x + 0.05, p.y + 0.02});
  expect_matches_oracle(old_mesh, new_mesh, 1e-13);
  const auto polys = qr::sweep_swap_regions(old_mesh, new_mesh).polygons;
  for (int k = 0; k < old_mesh.num_cells(); ++k) {
    const CellIndex c = old_mesh.cell_at(k);
    const auto s = qr::invading_occupied(c, polys);
    EXPECT_NEAR(s.invading_area - s.occupied_area,
                qt::shoelace(qt::as_poly(new_mesh.cell(c))) -
                    qt::shoelace(qt::as_poly(old_mesh.cell(c))),
                1e-13);
  }
}

TEST(SwapSweep, FuzzedConvexPairsMatchClipping) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const auto old_mesh = qt::jittered_mesh(5, 0.2, rng);
    const auto new_mesh = qt::jittered_mesh(5, 0.2, rng);
    expect_matches_oracle(old_mesh, new_mesh, 1e-13);
  }
}

TEST(SwapSweep, PolygonsArePositiveAndOwnedWithinPatch) {
  const auto p = qr::random_pair(11, 2);
  for (const auto& poly : qr::sweep_swap_regions(p.first, p.second).polygons) {
    EXPECT_GT(poly.area, 0.0);
    EXPECT_NEAR(poly.area, qt::shoelace(poly.polygon), 1e-16);
    EXPECT_LE(std::abs(poly.owner_old.i - poly.owner_new.i), 1);
    EXPECT_LE(std::abs(poly.owner_old.j - poly.owner_new.j), 1);
    EXPECT_FALSE(poly.owner_old == poly.owner_new);
  }
}

TEST(SwapSweep, UnionIdentity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto old_mesh = qt::jittered_mesh(11, 0.2, rng);
    const auto new_mesh = qt::jittered_mesh(11, 0.2, rng);
    const auto polys = qr::sweep_swap_regions(old_mesh, new_mesh).polygons;
    double invading = 0.0, occupied = 0.0, total = 0.0;
    for (const auto& s : qr::invading_occupied_all(old_mesh, polys)) {
      invading += s.invading_area;
      occupied += s.occupied_area;
    }
    for (const auto& poly : polys) total += poly.area;
    // Independent total: new-cell area outside its old counterpart.
    double outside = 0.0;
    for (int k = 0; k < new_mesh.num_cells(); ++k) {
      const CellIndex c = new_mesh.cell_at(k);
      outside += new_mesh.cell_area(c) - qt::convex_overlap_area(qt::as_poly(new_mesh.cell(c)),
                                                                 qt::as_poly(old_mesh.cell(c)));
    }
    EXPECT_NEAR(invading, occupied, 1e-13 * total);
    EXPECT_NEAR(invading, total, 1e-13 * total);
    EXPECT_NEAR(total, outside, 1e-13 * total);
  }
}

TEST(SwapSweep, Disjoint) {
  const auto p = qr::random_pair(11, 3);
  const auto polys = qr::sweep_swap_regions(p.first, p.second).polygons;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 20000; ++k) {
    const Point2 q{u(rng), u(rng)};
    int covering = 0;
    for (const auto& poly : polys) covering += qt::inside(poly.polygon, q) ? 1 : 0;
    EXPECT_LE(covering, 1);
  }
  // Pairwise overlap of convex polygons by clipping.
  int pairs = 0;
  for (std::size_t a = 0; a < polys.size() && pairs < 5000; a += 3) {
    if (!qr::is_convex_ccw(polys[a].polygon)) continue;
    for (std::size_t b = a + 1; b < polys.size() && pairs < 5000; b += 7) {
      if (!qr::is_convex_ccw(polys[b].polygon)) continue;
      ++pairs;
      EXPECT_LE(qt::convex_overlap_area(polys[a].polygon, polys[b].polygon), 1e-13);
    }
  }
  EXPECT_GT(pairs, 100);
}

TEST(InvadingOccupied, IdenticalMeshes) {
  const auto s = qr::invading_occupied({2, 2}, {});
  EXPECT_EQ(s.invading_area, 0.0);
  EXPECT_EQ(s.occupied_area, 0.0);
  EXPECT_TRUE(s.invading_by_old.empty());
}

TEST(InvadingOccupied, AreaIdentityRandomGrids) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = qr::random_pair(11, seed);
    const auto polys = qr::sweep_swap_regions(p.first, p.second).polygons;
    for (int k = 0; k < p.first.num_cells(); ++k) {
      const CellIndex c = p.first.cell_at(k);
      const auto s = qr::invading_occupied(c, polys);
      const double lhs = p.second.cell_area(c);
      EXPECT_NEAR(lhs, p.first.cell_area(c) - s.occupied_area + s.invading_area, 1e-13 * lhs);
    }
  }
}

TEST(GeneralizedFlux, IdenticalMeshesAndIdentity) {
  EXPECT_TRUE(qr::generalized_flux({3, 3}, {}).empty());
  const auto p = qr::random_pair(11, 8);
  const auto polys = qr::sweep_swap_regions(p.first, p.second).polygons;
  for (int k = 0; k < p.first.num_cells(); ++k) {
    const CellIndex c = p.first.cell_at(k);
    const auto fa = qr::generalized_flux(c, polys);
    EXPECT_LE(fa.size(), 9u);
    double sum = 0.0;
    for (const auto& [cell, v] : fa) {
      sum += v;
      EXPECT_LE(std::abs(cell.i - c.i), 1);
      EXPECT_LE(std::abs(cell.j - c.j), 1);
    }
    EXPECT_NEAR(p.second.cell_area(c), p.first.cell_area(c) + sum, 1e-13);
  }
}

TEST(GeneralizedFlux, FuzzedMapSize) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> amp(0.05, 0.45);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto old_mesh = qt::jittered_mesh(4, amp(rng), rng);
    const auto new_mesh = qt::jittered_mesh(4, amp(rng), rng);
    const auto polys = qr::sweep_swap_regions(old_mesh, new_mesh).polygons;
    for (int k = 0; k < old_mesh.num_cells(); ++k) {
      ASSERT_LE(qr::generalized_flux(old_mesh.cell_at(k), polys).size(), 9u);
    }
  }
}

TEST(RemapCib, IdenticalAndUniform) {
  const auto m = qr::random_grid(11, 0.4, 4);
  const auto masses = qr::init_cell_masses(m, qr::DensityKind::kTanh).masses;
  EXPECT_EQ(qr::remap_cib(m, m, masses).masses, masses);

  const auto p = qr::random_pair(21, 4);
  const auto old_masses = qr::init_cell_masses(p.first, qr::DensityKind::kUniform).masses;
  const auto r = qr::remap_cib(p.first, p.second, old_masses);
  for (int k = 0; k < p.second.num_cells(); ++k) {
    EXPECT_NEAR(r.masses[static_cast<std::size_t>(k)], p.second.cell_area(p.second.cell_at(k)),
                1e-13);
  }
}

TEST(RemapCib, MatchesFbOnRandomGrids) {
  for (auto kind : {qr::DensityKind::kFranke, qr::DensityKind::kTanh, qr::DensityKind::kPeak}) {
    const auto p = qr::random_pair(21, 12);
    const auto old_masses = qr::init_cell_masses(p.first, kind).masses;
    const auto fb = qr::remap_fb(p.first, p.second, old_masses);
    const auto cib = qr::remap_cib(p.first, p.second, old_masses);
    const double max_mass = *std::max_element(fb.masses.begin(), fb.masses.end());
    for (std::size_t k = 0; k < fb.masses.size(); ++k) {
      EXPECT_NEAR(fb.masses[k], cib.masses[k], 1e-12 * max_mass);
    }
  }
}

TEST(SwapPolygonCount, Examples) {
  EXPECT_EQ(qr::swap_polygon_count(3, 3, 0, 0), 5);
  EXPECT_EQ(qr::swap_polygon_count(2, 2, 0, 0), 0);
  EXPECT_EQ(qr::swap_polygon_count(3, 3, 2, 1), 8);
  EXPECT_EQ(qr::swap_polygon_count(11, 11, 0, 0), 261);
}

// Dense-sampling oracle: sign changes of the signed horizontal gap between
// x_i^a and x_i^b along the logical coordinate.
int sampled_crossings(const qr::StructuredQuadMesh& a, const qr::StructuredQuadMesh& b, int i) {
  auto x_at = [](const qr::StructuredQuadMesh& m, int i, double y) {
    for (int j = 1; j < m.N(); ++j) {
      const Point2 p = m.vertex(i, j), q = m.vertex(i, j + 1);
      if (y >= p.y && y <= q.y) return p.x + (q.x - p.x) * (y - p.y) / (q.y - p.y);
    }
    return m.vertex(i, m.N()).x;
  };
  int changes = 0;
  int last = 0;
  for (int s = 1; s < 20000; ++s) {
    const double y = s / 20000.0;
    const double d = x_at(b, i, y) - x_at(a, i, y);
    const int sign = d > 1e-13 ? 1 : (d < -1e-13 ? -1 : 0);
    if (sign != 0 && last != 0 && sign != last) ++changes;
    if (sign != 0) last = sign;
  }
  return changes;
}

TEST(SingularPoints, SingleCrossing) {
  // x_2^a is the line x = 0.5; x_2^b runs from (0.45,0) to (0.55,1) and
  // crosses it once at y = 0.5. The old middle vertex sits lower so the
  // crossing is interior to both curves.
  const qr::StructuredQuadMesh old_mesh(
      3, 3, {{0, 0}, {0.5, 0}, {1, 0}, {0, 0.5}, {0.5, 0.4}, {1, 0.5}, {0, 1}, {0.5, 1}, {1, 1}});
  const qr::StructuredQuadMesh new_mesh(
      3, 3,
      {{0, 0}, {0.45, 0}, {1, 0}, {0, 0.5}, {0.503, 0.53}, {1, 0.5}, {0, 1}, {0.55, 1}, {1, 1}});
  const auto census = qr::count_singular_points(old_mesh, new_mesh);
  EXPECT_EQ(census.ns_xx, 1);
  EXPECT_EQ(census.ns_yy, 0);
  ASSERT_EQ(census.points.size(), 1u);
  EXPECT_NEAR(census.points[0].point.x, 0.5, 1e-15);
  EXPECT_NEAR(census.points[0].point.y, 0.5, 1e-15);
}

TEST(SingularPoints, IdenticalMeshesAreCollinear) {
  const auto m = qr::random_grid(6, 0.4, 1);
  try {
    qr::count_singular_points(m, m);
    FAIL();
  } catch (const qr::RemapError& e) {
    EXPECT_EQ(e.code(), qr::ErrorCode::kCollinearCurves);
  }
}

TEST(SingularPoints, MatchDenseSampling) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = qr::random_pair(11, seed);
    const auto census = qr::count_singular_points(p.first, p.second);
    int sampled = 0;
    for (int i = 2; i < 11; ++i) sampled += sampled_crossings(p.first, p.second, i);
    EXPECT_EQ(census.ns_xx, sampled) << seed;
    EXPECT_EQ(census.ns_xx + census.ns_yy, static_cast<int>(census.points.size()));
  }
}

TEST(CensusCheck, RandomGridsMatchCountLaw) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = qr::random_pair(11, seed);
    const auto c = qr::census_check(p.first, p.second);
    ASSERT_TRUE(c.applicable) << c.note;
    EXPECT_EQ(c.enumerated, c.expected);
    EXPECT_EQ(c.expected, qr::swap_polygon_count(11, 11, c.ns_xx, c.ns_yy));
    EXPECT_TRUE(c.strips_match);
  }
}

TEST(CensusCheck, SingleCrossingStrip) {
  const auto p = qt::crossing_strip_pair(11, 5);
  const auto c = qr::census_check(p.first, p.second);
  ASSERT_TRUE(c.applicable) << c.note;
  EXPECT_EQ(c.ns_xx, 1);
  EXPECT_EQ(c.ns_yy, 0);
  ASSERT_EQ(c.strip_counts.size(), 9u);
  for (std::size_t s = 0; s < c.strip_counts.size(); ++s) {
    const int i = static_cast<int>(s) + 2;
    EXPECT_EQ(c.strip_counts[s], i == 5 ? 20 : 19) << i;
  }
  EXPECT_EQ(c.enumerated, c.expected);
}

TEST(CensusCheck, TensorGridsAreOutsideTheHypotheses) {
  const auto p = qr::tensor_pair(11, 11);
  const auto c = qr::census_check(p.first, p.second);
  EXPECT_FALSE(c.applicable);
  EXPECT_FALSE(c.note.empty());
}

TEST(SwapCsv, Format) {
  const auto p = qr::random_pair(6, 1);
  const auto polys = qr::sweep_swap_regions(p.first, p.second).polygons;
  std::ostringstream os;
  qr::write_swap_polygons_csv(os, polys);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "i_new,j_new,i_old,j_old,kind,area,vertices");
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    EXPECT_NE(line.find("\"POLYGON(("), std::string::npos);
    EXPECT_EQ(line.find('\r'), std::string::npos);
  }
  EXPECT_EQ(rows, 2 * polys.size());
}

}  // namespace
