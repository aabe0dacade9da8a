#pragma once

#include <array>
#include <string>
#include <vector>

namespace sandplate::goldens {

inline constexpr std::array<const char*, 6> kVariantOrder = {"HSDT13", "HSDT11A", "HSDT11B",
                                                             "HSDT9", "TSDT7", "FSDT5"};

/// Single-layer uniform-load convergence study (deflection measure -w0/h,
/// values in units of 1e-2). a/h = 20, V* = 0.14, PmPV matrix.
struct ConvergenceGolden {
  std::array<int, 4> meshes;                      // 4, 6, 8, 16
  std::array<std::array<double, 4>, 3> fsdt5;     // per grading UD, FG-V, FG-X
  std::array<std::array<double, 4>, 3> hsdt11b;   // informational
  std::array<double, 3> reference;                // published reference row
};
const ConvergenceGolden& single_layer_convergence();

/// Sandwich bending under a sinusoidal load: nondimensional
/// (|u|, |w|, |sxx|, |sxz|) at the standard sampling points, per theory.
struct StaticRow {
  const char* variant;
  double u, w, sxx, sxz;
};
struct StaticCase {
  double a_over_h;
  double core_to_face;
  double v_star;
  std::array<StaticRow, 6> rows;
};
const std::array<StaticCase, 4>& sandwich_static_v17();
const std::array<StaticCase, 4>& sandwich_static_v28();
const std::array<StaticCase, 4>& sandwich_thermal_v17();
const std::array<StaticCase, 4>& sandwich_thermal_v28();

/// Fundamental-frequency validation at a/h = 20, graded skins, with the
/// published reference row.
struct ModalRow {
  const char* variant;
  double Omega;
};
struct ModalValidationCase {
  double temperature;
  double core_to_face;
  double v_star;
  std::array<ModalRow, 6> rows;
  double reference;
};
const std::array<ModalValidationCase, 12>& modal_validation();

/// Fundamental-frequency parametric grids (thick plates, 300 K, graded skins
/// / UD-vs-graded temperature study).
struct ModalSweepCase {
  double a_over_h;
  double core_to_face;
  double v_star;
  std::array<ModalRow, 6> rows;
};
const std::array<ModalSweepCase, 12>& modal_thickness_sweep();

struct ModalTemperatureCase {
  double a_over_h;
  const char* grading;  // "UD" or "FG"
  double temperature;
  std::array<ModalRow, 6> rows;
};
const std::array<ModalTemperatureCase, 8>& modal_temperature_sweep();

/// Per-suite relative tolerances.
struct Tolerances {
  double convergence_fsdt5 = 0.005;
  double convergence_reference = 0.01;
  double static_fsdt5 = 0.01;
  double static_higher_order = 0.02;
  double thermal_fsdt5 = 0.02;
  double thermal_higher_order = 0.05;  // informational
  double modal_fsdt5 = 0.005;
  double modal_reference = 0.01;
  double modal_sweep = 0.02;           // FSDT5 / TSDT7 / HSDT9 rows
  double modal_sweep_info = 0.05;      // informational
};
const Tolerances& tolerances();

double row_value(const StaticRow& row, const std::string& quantity);

}  // namespace sandplate::goldens
