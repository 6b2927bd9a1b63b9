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

// Command-line driver: grid generation, validation, remaps, censuses and
// convergence studies.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadremap/error.hpp"
#include "quadremap/gridgen.hpp"
#include "quadremap/harness.hpp"
#include "quadremap/mesh.hpp"

namespace qr = quadremap;

namespace {

int fail(std::string_view code, const std::string& detail) {
  std::string line = detail;
  for (char& ch : line) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  std::fprintf(stderr, "error: %.*s: %s\n", static_cast<int>(code.size()), code.data(),
               line.c_str());
  return 1;
}

struct Options {
  std::string family = "random";
  int nx = 11;
  double t = -1.0;
  double gamma = qr::kOldGamma;
  std::uint64_t seed = 1;
  std::uint32_t stream = 0;
  std::string out;
  std::string old_path;
  std::string new_path;
  std::string function = "franke";
  std::string method = "fb";
  std::vector<int> sizes = {11, 21, 31, 41, 51, 61, 71, 81, 91, 101};
  bool no_rescale = false;
  bool strict = false;
  bool no_timing = false;
};

qr::RunConfig to_config(const Options& o) {
  qr::RunConfig cfg;
  cfg.family = qr::parse_family(o.family);
  cfg.nx = o.nx;
  cfg.sizes = o.sizes;
  cfg.function = qr::parse_density_kind(o.function);
  cfg.method = qr::parse_remap_method(o.method);
  cfg.seed = o.seed;
  cfg.out = o.out;
  cfg.rescale = !o.no_rescale;
  cfg.strict = o.strict;
  cfg.timing = !o.no_timing;
  qr::check_config(cfg);
  return cfg;
}

void cmd_generate(const Options& o) {
  if (o.out.empty()) throw qr::RemapError(qr::ErrorCode::kInvalidConfig, "--out is required");
  const qr::GridFamily family = qr::parse_family(o.family);
  if (o.nx < 3) throw qr::RemapError(qr::ErrorCode::kInvalidConfig, "nx must be at least 3");
  const qr::StructuredQuadMesh mesh =
      family == qr::GridFamily::kTensor
          ? qr::tensor_grid(o.nx, o.nx, o.t < 0.0 ? 0.0 : o.t, !o.no_rescale)
          : qr::random_grid(o.nx, o.gamma, o.seed, o.stream);
  qr::write_mesh_file(o.out, mesh);
  std::printf("wrote %s (%d x %d vertices)\n", o.out.c_str(), mesh.M(), mesh.N());
}

int cmd_validate(const Options& o) {
  if (o.old_path.empty() || o.new_path.empty()) {
    throw qr::RemapError(qr::ErrorCode::kInvalidConfig, "--old and --new are required");
  }
  const qr::StructuredQuadMesh old_mesh = qr::read_mesh_file(o.old_path);
  const qr::StructuredQuadMesh new_mesh = qr::read_mesh_file(o.new_path);
  const qr::AssumptionReport r = qr::validate_assumptions(old_mesh, new_mesh);
  std::printf("a1=%d a2=%d a3=%d shared_boundary=%d common_interior_edges=%d "
              "counting_hypotheses=%d\n",
              r.a1, r.a2, r.a3, r.shared_boundary, r.common_interior_edges,
              r.counting_hypotheses());
  for (const auto& [i, j] : r.a1_violations) std::printf("a1_violation vertex=(%d,%d)\n", i, j);
  for (const auto& v : r.a2_violations) {
    std::printf("a2_violation curves=%s i=%d j=%d contacts=%d collinear=%d\n",
                v.new_family == qr::EdgeFamily::kVertical ? "x_new/y_old" : "y_new/x_old", v.i,
                v.j, v.contacts, v.collinear);
  }
  for (const auto& w : r.a3_warnings) {
    std::printf("a3_warning new_edge=%s old_edge=%s x=%s y=%s collinear=%d\n",
                qr::to_string(w.new_edge).c_str(), qr::to_string(w.old_edge).c_str(),
                qr::format_real(w.point.x).c_str(), qr::format_real(w.point.y).c_str(),
                w.collinear);
  }
  return r.a1 && r.a2 ? 0 : 3;
}

void cmd_remap(const Options& o) {
  const qr::RunConfig cfg = to_config(o);
  const qr::RemapRun run = qr::run_remap(cfg);
  std::printf("method=%s nx=%d residual=%s linf_density=%s linf_mass=%s polygons=%ld ns_xx=%d "
              "ns_yy=%d degeneracy_events=%ld wall_time_ms=%s\n",
              std::string(qr::remap_method_name(cfg.method)).c_str(), cfg.nx,
              qr::format_real(run.result.conservation_residual).c_str(),
              qr::format_real(run.norms.linf_density).c_str(),
              qr::format_real(run.norms.linf_mass).c_str(), run.result.polygon_count,
              run.result.ns_xx, run.result.ns_yy, run.result.degeneracy_events,
              qr::format_real(run.result.wall_time_ms).c_str());
}

void cmd_convergence(const Options& o) {
  const qr::RunConfig cfg = to_config(o);
  const qr::ConvergenceTable table = qr::run_convergence(cfg);
  qr::write_convergence_csv(std::cout, table);
  auto order = [](const std::optional<double>& v) {
    return v ? qr::format_real(*v) : std::string("skipped");
  };
  std::printf("order linf_density=%s linf_mass=%s\n", order(table.density_order).c_str(),
              order(table.mass_order).c_str());
}

void cmd_census(const Options& o) {
  const qr::RunConfig cfg = to_config(o);
  const qr::CensusRun run = qr::run_census(cfg);
  std::printf("classified=%ld degenerate=%ld invalid=%ld labels=%zu swap_paths=%zu "
              "polygons=%ld expected=%ld applicable=%d\n",
              run.cases.classified_edges, run.cases.degenerate_edges,
              run.cases.invalid_combinations, run.cases.edge_labels.size(),
              run.cases.swap_paths.size(), run.check.enumerated, run.check.expected,
              run.check.applicable);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conservative remapping between structured quadrilateral meshes"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");
  Options o;
  app.add_option("--family", o.family, "tensor|random");
  app.add_option("--nx", o.nx, "vertices per direction");
  app.add_option("--t", o.t, "tensor grid time parameter");
  app.add_option("--gamma", o.gamma, "random grid perturbation amplitude");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--stream", o.stream, "random substream");
  app.add_option("--out", o.out, "output file or directory");
  app.add_option("--old", o.old_path, "old mesh file");
  app.add_option("--new", o.new_path, "new mesh file");
  app.add_option("--function", o.function, "franke|tanh|peak|uniform");
  app.add_option("--method", o.method, "fb|cib");
  app.add_option("--sizes", o.sizes, "convergence sizes")->delimiter(',');
  app.add_flag("--no-rescale", o.no_rescale, "keep the unrescaled tensor y coordinate");
  app.add_flag("--strict", o.strict, "treat degenerate constructions as errors");
  app.add_flag("--no-timing", o.no_timing, "write 0 for wall times");

  auto* generate = app.add_subcommand("generate", "write one grid to a mesh file")->fallthrough();
  auto* validate = app.add_subcommand("validate", "check mesh-pair assumptions")->fallthrough();
  auto* remap = app.add_subcommand("remap", "remap one density")->fallthrough();
  auto* convergence = app.add_subcommand("convergence", "run a convergence study")->fallthrough();
  auto* census = app.add_subcommand("census", "classification and polygon census")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("InvalidConfig", e.what());
  }

  try {
    if (generate->parsed()) cmd_generate(o);
    if (validate->parsed()) return cmd_validate(o);
    if (remap->parsed()) cmd_remap(o);
    if (convergence->parsed()) cmd_convergence(o);
    if (census->parsed()) cmd_census(o);
  } catch (const qr::RemapError& e) {
    return fail(qr::error_code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail("Io", e.what());
  }
  return 0;
}
