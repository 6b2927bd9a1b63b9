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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadremap/classify.hpp"
#include "quadremap/fields.hpp"
#include "quadremap/gridgen.hpp"
#include "quadremap/mesh.hpp"
#include "quadremap/remap.hpp"
#include "quadremap/swap.hpp"

namespace quadremap {

enum class GridFamily { kTensor, kRandom };

GridFamily parse_family(std::string_view name);
std::string_view family_name(GridFamily family);

struct RunConfig {
  GridFamily family = GridFamily::kRandom;
  int nx = 11;
  std::vector<int> sizes = {11, 21, 31, 41, 51, 61, 71, 81, 91, 101};
  DensityKind function = DensityKind::kFranke;
  RemapMethod method = RemapMethod::kFB;
  std::uint64_t seed = 1;
  std::string out;  // output directory; empty writes nothing
  bool rescale = true;
  bool strict = false;  // degenerate classifications become errors
  bool timing = true;   // false writes 0 for wall times (byte-stable output)
};

/// Throws InvalidConfig for sizes below 3.
void check_config(const RunConfig& cfg);

MeshPair make_mesh_pair(GridFamily family, int nx, std::uint64_t seed, bool rescale = true);

struct RemapRun {
  RemapResult result;
  AssumptionReport report;
  ErrorNorms norms;
  std::vector<double> old_masses;
};

/// Builds the pair, validates it (A1 failures abort), initializes masses and
/// remaps. With cfg.out set, writes cells.csv and summary.csv there.
RemapRun run_remap(const RunConfig& cfg);

struct ConvergenceRow {
  int nx = 0;
  double h = 0.0;
  double linf_density = 0.0;
  double linf_mass = 0.0;
  double conservation_residual = 0.0;
  long n_swap_polygons = 0;
  int ns_xx = 0;
  int ns_yy = 0;
  double wall_time_ms = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;  // ordered by nx
  std::optional<double> density_order;  // least-squares slope of log error vs log h
  std::optional<double> mass_order;
};

ConvergenceTable run_convergence(const RunConfig& cfg);

/// Slope of the least-squares line through (log x, log y).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table);

struct CensusRun {
  CaseCensus cases;
  CensusCheck check;
  SwapSweep sweep;
};

CensusRun run_census(const RunConfig& cfg);

}  // namespace quadremap
