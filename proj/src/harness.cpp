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

#include "quadremap/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "quadremap/error.hpp"
#include "quadremap/swept.hpp"

namespace quadremap {

GridFamily parse_family(std::string_view name) {
  if (name == "tensor") return GridFamily::kTensor;
  if (name == "random") return GridFamily::kRandom;
  throw RemapError(ErrorCode::kUnknownKind, "unknown family '" + std::string(name) + "'");
}

std::string_view family_name(GridFamily family) {
  return family == GridFamily::kTensor ? "tensor" : "random";
}

void check_config(const RunConfig& cfg) {
  if (cfg.nx < 3) throw RemapError(ErrorCode::kInvalidConfig, "nx must be at least 3");
  for (int n : cfg.sizes) {
    if (n < 3) throw RemapError(ErrorCode::kInvalidConfig, "sizes must be at least 3");
  }
}

MeshPair make_mesh_pair(GridFamily family, int nx, std::uint64_t seed, bool rescale) {
  if (family == GridFamily::kTensor) return tensor_pair(nx, nx, rescale);
  return random_pair(nx, seed);
}

namespace {

std::ofstream open_output(const std::string& dir, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw RemapError(ErrorCode::kIo, "cannot create " + dir + ": " + ec.message());
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw RemapError(ErrorCode::kIo, "cannot open " + path);
  return os;
}

void write_summary(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv) {
  for (std::size_t k = 0; k < kv.size(); ++k) os << (k ? "," : "") << kv[k].first;
  os << '\n';
  for (std::size_t k = 0; k < kv.size(); ++k) os << (k ? "," : "") << kv[k].second;
  os << '\n';
}

}  // namespace

RemapRun run_remap(const RunConfig& cfg) {
  check_config(cfg);
  const MeshPair pair = make_mesh_pair(cfg.family, cfg.nx, cfg.seed, cfg.rescale);
  const StructuredQuadMesh& old_mesh = pair.first;
  const StructuredQuadMesh& new_mesh = pair.second;

  RemapRun run;
  run.report = validate_assumptions(old_mesh, new_mesh);
  if (!run.report.a1) {
    throw RemapError(ErrorCode::kAssumptionViolated,
                     std::to_string(run.report.a1_violations.size()) +
                         " new vertices leave their old patch");
  }
  run.old_masses = init_cell_masses(old_mesh, cfg.function).masses;
  run.result = cfg.method == RemapMethod::kFB ? remap_fb(old_mesh, new_mesh, run.old_masses)
                                              : remap_cib(old_mesh, new_mesh, run.old_masses);
  if (cfg.method == RemapMethod::kFB) {
    try {
      const SingularPointCensus ns = count_singular_points(old_mesh, new_mesh);
      run.result.ns_xx = ns.ns_xx;
      run.result.ns_yy = ns.ns_yy;
    } catch (const RemapError& e) {
      if (e.code() != ErrorCode::kCollinearCurves) throw;
    }
  }
  if (!cfg.timing) run.result.wall_time_ms = 0.0;
  if (cfg.strict && run.result.degeneracy_events > 0) {
    throw RemapError(ErrorCode::kDegenerateEdge,
                     std::to_string(run.result.degeneracy_events) + " degenerate overlaps");
  }
  run.norms = error_norms(run.result.masses, cfg.function, new_mesh);

  if (!cfg.out.empty()) {
    std::ofstream cells = open_output(cfg.out, "cells.csv");
    cells << "i,j,area,mass,density,center_x,center_y,exact_density\n";
    for (int k = 0; k < new_mesh.num_cells(); ++k) {
      const CellIndex c = new_mesh.cell_at(k);
      const auto quad = new_mesh.cell(c);
      const Point2 center = cell_center(quad);
      const auto idx = static_cast<std::size_t>(k);
      cells << c.i << ',' << c.j << ',' << format_real(signed_area(quad)) << ','
            << format_real(run.result.masses[idx]) << ','
            << format_real(run.result.densities[idx]) << ',' << format_real(center.x) << ','
            << format_real(center.y) << ','
            << format_real(eval_density(cfg.function, center.x, center.y)) << '\n';
    }
    std::ofstream summary = open_output(cfg.out, "summary.csv");
    write_summary(summary,
                  {{"family", std::string(family_name(cfg.family))},
                   {"nx", std::to_string(cfg.nx)},
                   {"function", std::string(density_name(cfg.function))},
                   {"method", std::string(remap_method_name(cfg.method))},
                   {"seed", std::to_string(cfg.seed)},
                   {"conservation_residual", format_real(run.result.conservation_residual)},
                   {"linf_density", format_real(run.norms.linf_density)},
                   {"linf_mass", format_real(run.norms.linf_mass)},
                   {"polygon_count", std::to_string(run.result.polygon_count)},
                   {"ns_xx", std::to_string(run.result.ns_xx)},
                   {"ns_yy", std::to_string(run.result.ns_yy)},
                   {"degeneracy_events", std::to_string(run.result.degeneracy_events)},
                   {"a1", run.report.a1 ? "1" : "0"},
                   {"a2", run.report.a2 ? "1" : "0"},
                   {"a3", run.report.a3 ? "1" : "0"},
                   {"wall_time_ms", format_real(run.result.wall_time_ms)}});
  }
  return run;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

ConvergenceTable run_convergence(const RunConfig& cfg) {
  check_config(cfg);
  if (cfg.sizes.size() < 3) {
    throw RemapError(ErrorCode::kInvalidConfig, "a convergence study needs at least 3 sizes");
  }
  std::vector<int> sizes = cfg.sizes;
  std::sort(sizes.begin(), sizes.end());
  ConvergenceTable table;
  for (int nx : sizes) {
    RunConfig one = cfg;
    one.nx = nx;
    one.out.clear();
    const RemapRun run = run_remap(one);
    table.rows.push_back({nx, 1.0 / (nx - 1), run.norms.linf_density, run.norms.linf_mass,
                          run.result.conservation_residual, run.result.polygon_count,
                          run.result.ns_xx, run.result.ns_yy, run.result.wall_time_ms});
  }
  // Errors at round-off level carry no rate information.
  const bool fit = std::all_of(table.rows.begin(), table.rows.end(), [](const ConvergenceRow& r) {
    return r.linf_density > 1e-13 && r.linf_mass > 1e-13;
  });
  if (fit) {
    std::vector<double> h, ed, em;
    for (const auto& r : table.rows) {
      h.push_back(r.h);
      ed.push_back(r.linf_density);
      em.push_back(r.linf_mass);
    }
    table.density_order = loglog_slope(h, ed);
    table.mass_order = loglog_slope(h, em);
  }
  if (!cfg.out.empty()) {
    std::ofstream os = open_output(cfg.out, "convergence.csv");
    write_convergence_csv(os, table);
    std::ofstream orders = open_output(cfg.out, "orders.csv");
    orders << "norm,order\n";
    orders << "linf_density," << (table.density_order ? format_real(*table.density_order) : "")
           << '\n';
    orders << "linf_mass," << (table.mass_order ? format_real(*table.mass_order) : "") << '\n';
  }
  return table;
}

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table) {
  os << "nx,h,linf_density,linf_mass,conservation_residual,n_swap_polygons,ns_xx,ns_yy,"
        "wall_time_ms,linf_density_scaled,linf_mass_scaled\n";
  if (table.rows.empty()) return;
  // Errors are also reported relative to the coarsest level (nx = 11 when present).
  const auto ref_it = std::find_if(table.rows.begin(), table.rows.end(),
                                   [](const ConvergenceRow& r) { return r.nx == 11; });
  const ConvergenceRow& ref = ref_it != table.rows.end() ? *ref_it : table.rows.front();
  auto scaled = [](double v, double r) { return r == 0.0 ? std::string() : format_real(v / r); };
  for (const auto& r : table.rows) {
    os << r.nx << ',' << format_real(r.h) << ',' << format_real(r.linf_density) << ','
       << format_real(r.linf_mass) << ',' << format_real(r.conservation_residual) << ','
       << r.n_swap_polygons << ',' << r.ns_xx << ',' << r.ns_yy << ','
       << format_real(r.wall_time_ms) << ',' << scaled(r.linf_density, ref.linf_density) << ','
       << scaled(r.linf_mass, ref.linf_mass) << '\n';
  }
}

CensusRun run_census(const RunConfig& cfg) {
  check_config(cfg);
  const MeshPair pair = make_mesh_pair(cfg.family, cfg.nx, cfg.seed, cfg.rescale);
  CensusRun run;
  run.cases = case_census(pair.first, pair.second);
  if (cfg.strict && run.cases.degenerate_edges > 0) {
    throw RemapError(ErrorCode::kDegenerateEdge,
                     std::to_string(run.cases.degenerate_edges) + " degenerate edges");
  }
  run.check = census_check(pair.first, pair.second);
  run.sweep = sweep_swap_regions(pair.first, pair.second);

  if (!cfg.out.empty()) {
    std::ofstream labels = open_output(cfg.out, "labels.csv");
    labels << "label,count\n";
    for (const auto& [label, count] : run.cases.edge_labels) labels << label << ',' << count << '\n';
    std::ofstream paths = open_output(cfg.out, "swap_paths.csv");
    paths << "label,count\n";
    for (const auto& [label, count] : run.cases.swap_paths) paths << label << ',' << count << '\n';
    std::ofstream polys = open_output(cfg.out, "swap_polygons.csv");
    write_swap_polygons_csv(polys, run.sweep.polygons);
    std::ofstream summary = open_output(cfg.out, "census_summary.csv");
    write_summary(summary,
                  {{"family", std::string(family_name(cfg.family))},
                   {"nx", std::to_string(cfg.nx)},
                   {"seed", std::to_string(cfg.seed)},
                   {"classified_edges", std::to_string(run.cases.classified_edges)},
                   {"degenerate_edges", std::to_string(run.cases.degenerate_edges)},
                   {"boundary_adjacent_edges", std::to_string(run.cases.boundary_adjacent_edges)},
                   {"invalid_combinations", std::to_string(run.cases.invalid_combinations)},
                   {"distinct_labels", std::to_string(run.cases.edge_labels.size())},
                   {"distinct_swap_paths", std::to_string(run.cases.swap_paths.size())},
                   {"swap_polygons", std::to_string(run.check.enumerated)},
                   {"expected_polygons", std::to_string(run.check.expected)},
                   {"count_law_applicable", run.check.applicable ? "1" : "0"},
                   {"ns_xx", std::to_string(run.check.ns_xx)},
                   {"ns_yy", std::to_string(run.check.ns_yy)},
                   {"degeneracy_events", std::to_string(run.sweep.degeneracy_events)}});
  }
  return run;
}

}  // namespace quadremap
