// Batch front-end: run single analyses, parameter sweeps, and the bundled
// validation suites from JSON configs.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "sandplate/analysis.hpp"

using namespace sandplate;

namespace {

MaterialDatabase load_database(const std::string& path) {
  if (path.empty()) return MaterialDatabase::builtin();
  return MaterialDatabase::from_file(path);
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::string& materials_path, bool quiet) {
  const AnalysisConfig config = AnalysisConfig::from_file(config_path);
  const MaterialDatabase db = load_database(materials_path);
  const RunReport report = run(config, db);
  write_report(report, out_dir);
  if (!quiet) {
    if (report.center_deflection)
      std::printf("center_deflection (-w0/h): %.8e\n", *report.center_deflection);
    if (report.u_bar)
      std::printf("u_bar %.6f  w_bar %.6f  sxx_bar %.6f  sxz_bar %.6f\n", *report.u_bar,
                  *report.w_bar, *report.sxx_bar, *report.sxz_bar);
    for (std::size_t i = 0; i < report.Omega.size(); ++i)
      std::printf("Omega_%zu: %.6f\n", i + 1, report.Omega[i]);
    std::printf("report written to %s\n", out_dir.c_str());
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::string>& axis_args,
              const std::string& out_dir, const std::string& materials_path, int jobs,
              bool quiet) {
  const AnalysisConfig base = AnalysisConfig::from_file(config_path);
  const MaterialDatabase db = load_database(materials_path);

  std::vector<SweepAxis> axes;
  for (const std::string& arg : axis_args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--axis expects key=v1,v2,... got '" + arg + "'");
    SweepAxis ax;
    ax.key = arg.substr(0, eq);
    std::string rest = arg.substr(eq + 1);
    std::size_t pos = 0;
    while (pos != std::string::npos) {
      const auto comma = rest.find(',', pos);
      ax.values.push_back(rest.substr(pos, comma == std::string::npos ? comma : comma - pos));
      pos = comma == std::string::npos ? comma : comma + 1;
    }
    axes.push_back(std::move(ax));
  }

  const SweepResult result = sweep(base, axes, db, jobs);
  std::filesystem::create_directories(out_dir);
  write_sweep_csv(result, (std::filesystem::path(out_dir) / "results.csv").string());
  if (!quiet)
    std::printf("sweep: %zu cells, %s\n", result.cells.size(),
                result.all_ok() ? "all ok" : "with errors");
  return result.all_ok() ? 0 : 1;
}

int cmd_validate(const std::string& suite, const std::string& out_dir,
                 const std::string& materials_path) {
  const MaterialDatabase db = load_database(materials_path);
  std::vector<std::string> suites;
  if (suite == "all")
    suites = validation_suites();
  else
    suites.push_back(suite);

  bool all_passed = true;
  for (const std::string& name : suites) {
    const ValidationReport report = validate(name, db);
    int failed = 0, gated = 0;
    for (const auto& row : report.rows) {
      if (row.gating) {
        ++gated;
        if (!row.pass) ++failed;
      }
    }
    std::printf("%-22s %s  (%d/%d gating rows pass, %zu rows total)\n", name.c_str(),
                report.passed ? "PASS" : "FAIL", gated - failed, gated, report.rows.size());
    for (const auto& row : report.rows) {
      if (row.gating && !row.pass)
        std::printf("  FAIL %s %s: computed %.6g vs target %.6g (%.2f%% > %.2f%%)\n",
                    row.case_id.c_str(), row.quantity.c_str(), row.computed, row.target,
                    100.0 * row.rel_error, 100.0 * row.tolerance);
    }
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      write_validation_csv(report,
                           (std::filesystem::path(out_dir) / (name + ".csv")).string());
    }
    all_passed = all_passed && report.passed;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sandplate: bending and free vibration of sandwich plates with"
               " nanotube-reinforced skins"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", materials_path, suite;
  std::vector<std::string> axis_args;
  int jobs = 1;
  bool quiet = false;

  auto* run_cmd = app.add_subcommand("run", "run one analysis config");
  run_cmd->add_option("config", config_path, "config JSON")->required();
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_option("--materials", materials_path, "material database JSON");
  run_cmd->add_flag("--quiet", quiet, "suppress console summary");

  auto* sweep_cmd = app.add_subcommand("sweep", "Cartesian sweep over config axes");
  sweep_cmd->add_option("config", config_path, "base config JSON")->required();
  sweep_cmd->add_option("--axis", axis_args, "axis as key=v1,v2,...")->required();
  sweep_cmd->add_option("--out", out_dir, "output directory");
  sweep_cmd->add_option("--materials", materials_path, "material database JSON");
  sweep_cmd->add_option("--jobs", jobs, "worker threads");
  sweep_cmd->add_flag("--quiet", quiet, "suppress console summary");

  auto* validate_cmd = app.add_subcommand("validate", "run a pinned benchmark suite");
  validate_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  validate_cmd->add_option("--out", out_dir, "directory for the diff tables");
  validate_cmd->add_option("--materials", materials_path, "material database JSON");

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed()) return cmd_run(config_path, out_dir, materials_path, quiet);
    if (sweep_cmd->parsed())
      return cmd_sweep(config_path, axis_args, out_dir, materials_path, jobs, quiet);
    if (validate_cmd->parsed()) return cmd_validate(suite, out_dir, materials_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
