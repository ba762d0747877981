#include "twistorlab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using twistorlab::RunConfig;

struct TGrid {
  double t = 1.0;
  double t_min = 0.0, t_max = 0.0;
  int t_steps = 0;
};

void add_common_flags(CLI::App* cmd, RunConfig& config, TGrid& grid,
                      std::string& orientation) {
  cmd->add_option("--manifold", config.manifold,
                  "catalog entry: flat, sphere4, s2xs2, cp2_fs, "
                  "perturbed_flat");
  cmd->add_option("--metric-file", config.metric_file,
                  "metric DSL file (overrides --manifold)");
  cmd->add_option("--r", [&config](const std::vector<std::string>& v) {
        config.manifold_params["r"] = std::stod(v.back());
        return true;
      },
      "radius parameter (sphere4)");
  cmd->add_option("--r1", [&config](const std::vector<std::string>& v) {
        config.manifold_params["r1"] = std::stod(v.back());
        return true;
      },
      "first factor radius (s2xs2)");
  cmd->add_option("--r2", [&config](const std::vector<std::string>& v) {
        config.manifold_params["r2"] = std::stod(v.back());
        return true;
      },
      "second factor radius (s2xs2)");
  cmd->add_option("--eps", [&config](const std::vector<std::string>& v) {
        config.manifold_params["eps"] = std::stod(v.back());
        return true;
      },
      "perturbation scale (perturbed_flat)");
  cmd->add_option("--orientation", orientation,
                  "standard or reversed")
      ->check(CLI::IsMember({"standard", "reversed"}));
  cmd->add_option("--t", grid.t, "twistor metric parameter t > 0");
  cmd->add_option("--t-min", grid.t_min, "start of a t grid");
  cmd->add_option("--t-max", grid.t_max, "end of a t grid");
  cmd->add_option("--t-steps", grid.t_steps, "number of grid points");
  cmd->add_option("--points", config.points, "number of sample points");
  cmd->add_option("--seed", config.seed, "sampling seed");
  cmd->add_option("--tol", config.tol, "zero-classification tolerance");
  cmd->add_option("--h", config.h, "exterior-derivative stencil step");
  cmd->add_option("--rotations", config.rotations,
                  "random frame rotations for the supremum defects");
  cmd->add_option("--format", config.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", config.out_path, "output path (default stdout)");
  cmd->add_flag("--corrupt-frame", config.corrupt_frame)->group("");
}

std::vector<double> t_values_from(const TGrid& grid) {
  if (grid.t_steps > 0) {
    std::vector<double> ts;
    if (grid.t_steps == 1) return {grid.t_min};
    for (int i = 0; i < grid.t_steps; ++i)
      ts.push_back(grid.t_min + (grid.t_max - grid.t_min) * i /
                                    (grid.t_steps - 1));
    return ts;
  }
  return {grid.t};
}

int write_output(const RunConfig& config, const std::string& payload) {
  if (config.out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "{\"error\":{\"code\":2,\"message\":\"cannot open output "
                 "file\"}}\n";
    return 2;
  }
  out << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistorlab: curvature blocks and twistor-space metric "
               "conditions of 4-manifold charts"};
  // --h is a stencil parameter, so the help flag is long-form only.
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);

  RunConfig config;
  TGrid grid;
  std::string orientation = "standard";

  CLI::App* analyze = app.add_subcommand(
      "analyze", "sample points, decompose curvature, evaluate conditions");
  CLI::App* scan = app.add_subcommand(
      "scan-t", "tabulate the t-dependent defects over a t grid");
  CLI::App* oracle = app.add_subcommand(
      "oracle", "run the twistor-chart numerical exterior-calculus checks");
  for (CLI::App* cmd : {analyze, scan, oracle}) {
    cmd->set_help_flag("--help", "print usage");
    add_common_flags(cmd, config, grid, orientation);
  }

  CLI11_PARSE(app, argc, argv);

  config.orientation = orientation == "reversed"
                           ? twistorlab::Orientation::Reversed
                           : twistorlab::Orientation::Standard;
  config.t_values = t_values_from(grid);
  if (config.manifold.empty() && config.metric_file.empty())
    config.manifold = "flat";

  try {
    if (analyze->parsed()) {
      const twistorlab::Report report = twistorlab::run_analyze(config);
      return write_output(config, config.format == "csv"
                                      ? twistorlab::report_to_csv(report)
                                      : twistorlab::report_to_json(report));
    }
    if (scan->parsed()) {
      const twistorlab::ScanReport report = twistorlab::run_scan_t(config);
      return write_output(config, config.format == "csv"
                                      ? twistorlab::scan_to_csv(report)
                                      : twistorlab::scan_to_json(report));
    }
    const twistorlab::Report report = twistorlab::run_oracle(config);
    bool all_pass = true;
    for (const auto& rec : report.oracle) all_pass = all_pass && rec.pass;
    const int rc = write_output(config, config.format == "csv"
                                            ? twistorlab::report_to_csv(report)
                                            : twistorlab::report_to_json(report));
    if (rc != 0) return rc;
    return all_pass ? 0 : 3;
  } catch (const twistorlab::RunError& e) {
    std::cerr << e.to_json() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":{\"code\":3,\"message\":\"" << e.what()
              << "\"}}\n";
    return 3;
  }
}
