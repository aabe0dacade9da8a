// Independent closed-form reference for simply supported rectangular plates
// under the first-order (5-dof) kinematics: Navier series with the section
// resultants integrated by composite Simpson. Restates the material mixing
// rules on its own so the finite-element path is checked against a separate
// implementation.
#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace testsupport {

struct PointProps {
  double Q11, Q22, Q12, Q66;  // plane-stress reduced in-plane stiffness
  double G13, G23;
  double rho;
  double a11, a22;
};

struct PlateDef {
  double a = 0.0, b = 0.0, h = 0.0;
  std::function<PointProps(double z)> props;
  std::vector<double> breaks;  // interior z where properties kink or jump
  double kappa = 1.0;          // transverse shear factor
};

struct Resultants {
  Eigen::Matrix3d A = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d B = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d D = Eigen::Matrix3d::Zero();
  Eigen::Matrix2d As = Eigen::Matrix2d::Zero();
  double I0 = 0.0, I1 = 0.0, I2 = 0.0;
  Eigen::Vector2d NT = Eigen::Vector2d::Zero();  // thermal in-plane resultant per unit T0
  Eigen::Vector2d MT = Eigen::Vector2d::Zero();  // thermal moment per unit T0
};

Resultants integrate_resultants(const PlateDef& plate);

struct ModeSolution {
  int m = 1, n = 1;
  double U = 0.0, V = 0.0, W = 0.0, X = 0.0, Y = 0.0;
  double q_hat = 0.0;  // mechanical amplitude of this mode
  double T0 = 0.0;     // thermal amplitude
};

ModeSolution solve_mode_mechanical(const PlateDef& plate, int m, int n, double q_hat);
ModeSolution solve_mode_mechanical(const PlateDef& plate, const Resultants& r, int m, int n,
                                   double q_hat);
ModeSolution solve_mode_thermal(const PlateDef& plate, int m, int n, double T0);

/// Mid-plane center deflection under a uniform load (odd-mode double series).
double center_w0_uniform(const PlateDef& plate, double q0, int max_mode);

/// Lowest natural frequency over mode numbers up to max_mode (rad/s).
double fundamental_omega(const PlateDef& plate, int max_mode = 4);

double displacement_u(const PlateDef& plate, const ModeSolution& s, double x, double y, double z);
double displacement_w(const PlateDef& plate, const ModeSolution& s, double x, double y);
double stress_xx(const PlateDef& plate, const ModeSolution& s, double x, double y, double z);

/// Transverse shear from the 3D equilibrium integral of the closed-form
/// in-plane stress field.
double stress_xz_equilibrium(const PlateDef& plate, const ModeSolution& s, double x, double y,
                             double z);

/// Composite Simpson quadrature over [z0, z1] (panels must be even).
double simpson(const std::function<double(double)>& f, double z0, double z1, int panels = 512);

// ---------------------------------------------------------------------------
// Plain restatement of the mixture rules and benchmark constituents.
// ---------------------------------------------------------------------------

struct CntRow {
  double E11, E22, G12, a11, a22;
};
CntRow cnt_at(double T);  // linear interpolation of the 300/500/700 K table

struct MatrixDef {
  double E, nu, rho, alpha;
};
MatrixDef pmpv_at(double T);
MatrixDef pmma_at(double T);

struct CoreDef {
  double E, nu, rho, alpha;
};
CoreDef titanium_at(double T);

struct Mixture {
  double E11, E22, G12, G13, G23, nu12, nu21, rho, a11, a22;
};
Mixture mix(const CntRow& c, const MatrixDef& m, double eta1, double eta2, double eta3,
            double v_cn, double v_star);

PointProps plane_stress(const Mixture& mx);
PointProps plane_stress_core(const CoreDef& c);

/// Single layer with UD / graded-V / graded-X distribution, PmPV matrix.
PlateDef single_layer_plate(double a, double b, double h, const std::string& grading,
                            double v_star, double T, double kappa);

/// Sandwich with PMMA-based skins (UD or linear grading) and titanium core.
PlateDef sandwich_plate(double a, double b, double h, double core_to_face,
                        const std::string& grading, double v_star, double T, double kappa);

}  // namespace testsupport
