#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sandplate/postprocess.hpp"
#include "sandplate/presets.hpp"
#include "sandplate/solvers.hpp"

namespace sandplate {

/// Schema violations in user-supplied configs (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointQuery {
  std::string quantity;  // u, v, w, sxx, syy, sxy, szz, sxz, syz
  double xi = 0.0;       // x / a
  double eta = 0.0;      // y / b
  double zeta = 0.0;     // z / h in [-1/2, 1/2]
  Side side = Side::Unspecified;
};

struct ProfileRequest {
  std::string quantity;
  double xi = 0.0;
  double eta = 0.0;
  int samples_per_layer = 9;
};

struct OutputRequest {
  bool center_deflection = true;
  bool table_quantities = true;
  std::vector<PointQuery> points;
  std::vector<ProfileRequest> profiles;
};

/// One batch analysis: all physics lives in the config file.
struct AnalysisConfig {
  std::string analysis = "static";  // static | modal
  PlateGeometry geometry;
  bool sandwich = false;
  Grading grading = Grading::Uniform;
  double v_star = 0.0;
  double core_to_face = 0.0;
  std::string matrix_name, cnt_name, core_name;
  double temperature = 300.0;
  std::string theory = "FSDT5";
  int nx = 8, ny = 8;
  std::optional<LoadSpec> load;
  int modes = 6;
  // The first-order model carries the usual 5/6 transverse-shear factor by
  // default; the richer kinematics never use one.
  double shear_correction = 1.0;
  bool shear_correction_explicit = false;
  StretchClosure closure = StretchClosure::Reduced;
  NondimScheme::ThermalDeflection thermal_deflection =
      NondimScheme::ThermalDeflection::AspectSquared;
  // Tabulated thermal benchmark stresses follow the total-strain convention.
  ThermalStress thermal_stress = ThermalStress::TotalStrain;
  OutputRequest outputs;

  static AnalysisConfig from_json(const nlohmann::json& j);
  static AnalysisConfig from_file(const std::string& path);
  nlohmann::ordered_json to_json() const;

  Layup build_layup(const MaterialDatabase& db) const;
};

struct PointResult {
  PointQuery query;
  double raw = 0.0;
  std::optional<double> nondim;
};

struct ProfileResult {
  ProfileRequest request;
  std::vector<ProfileSample> samples;
  std::vector<double> nondim;  // empty when no scheme applies
};

struct RunReport {
  nlohmann::ordered_json config_echo;
  int equations_total = 0;
  int equations_constrained = 0;
  double static_residual = 0.0;
  int eigen_iterations = 0;

  // Static results
  std::optional<double> center_w0;          // raw mid-plane deflection at (a/2, b/2)
  std::optional<double> center_deflection;  // -w0 / h
  std::optional<double> u_bar, w_bar, sxx_bar, sxz_bar;  // signed nondim table set
  std::optional<double> u_raw, w_raw, sxx_raw, sxz_raw;
  std::vector<PointResult> points;
  std::vector<ProfileResult> profiles;

  // Modal results
  std::vector<double> omega;
  std::vector<double> Omega;

  nlohmann::ordered_json to_json() const;
};

RunReport run(const AnalysisConfig& config, const MaterialDatabase& db);

/// Writes report.json, results.csv and profile_<q>.csv under out_dir.
void write_report(const RunReport& report, const std::string& out_dir);

struct SweepAxis {
  std::string key;  // a_over_h | core_to_face | v_star | temperature | theory | grading | mesh
  std::vector<std::string> values;
};

struct SweepCell {
  std::vector<std::string> coordinates;
  std::optional<RunReport> report;
  std::string error;  // empty on success
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<SweepCell> cells;  // row-major over the axes, deterministic
  bool all_ok() const;
};

SweepResult sweep(const AnalysisConfig& base, const std::vector<SweepAxis>& axes,
                  const MaterialDatabase& db, int jobs = 1);

void write_sweep_csv(const SweepResult& result, const std::string& path);

struct ValidationRow {
  std::string case_id;
  std::string quantity;
  double computed = 0.0;
  double target = 0.0;
  double tolerance = 0.0;  // relative
  double rel_error = 0.0;
  bool gating = true;  // informational rows never fail the suite
  bool pass = true;
};

struct ValidationReport {
  std::string suite;
  std::vector<ValidationRow> rows;
  bool passed = true;
};

/// Pinned benchmark comparisons: mesh-convergence, single-layer-static,
/// sandwich-static, sandwich-thermal, modal-thermal.
ValidationReport validate(const std::string& suite, const MaterialDatabase& db);
std::vector<std::string> validation_suites();

void write_validation_csv(const ValidationReport& report, const std::string& path);

}  // namespace sandplate
