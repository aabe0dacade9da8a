#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sandplate {

/// Cubic polynomial in (T - T_ref), kelvin. Evaluates c0 + c1*t + c2*t^2 + c3*t^3.
struct TempPoly {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double T_ref = 0.0;

  double operator()(double T) const {
    const double t = T - T_ref;
    return c0 + t * (c1 + t * (c2 + t * c3));
  }
};

/// Nanotube moduli and expansion coefficients at one tabulated temperature.
struct CntProperties {
  double E11 = 0.0;      // Pa
  double E22 = 0.0;      // Pa
  double G12 = 0.0;      // Pa
  double alpha11 = 0.0;  // 1/K
  double alpha22 = 0.0;  // 1/K
};

/// Temperature-tabulated single-walled nanotube reinforcement.
/// Lookups interpolate linearly between table rows; queries outside the
/// tabulated range are a domain error.
class CntMaterial {
 public:
  CntMaterial() = default;
  CntMaterial(std::vector<double> temperatures, std::vector<CntProperties> rows,
              double nu12, double rho);

  CntProperties at(double T) const;
  double nu12() const { return nu12_; }
  double rho() const { return rho_; }
  const std::vector<double>& temperatures() const { return temperatures_; }
  const std::vector<CntProperties>& rows() const { return rows_; }

 private:
  std::vector<double> temperatures_;
  std::vector<CntProperties> rows_;
  double nu12_ = 0.0;
  double rho_ = 0.0;
};

/// Isotropic polymer matrix with temperature-dependent modulus and expansion.
struct MatrixMaterial {
  TempPoly E;        // Pa
  double nu = 0.0;
  double rho = 0.0;  // kg/m^3
  TempPoly alpha;    // 1/K

  double youngs(double T) const;
  double shear(double T) const { return youngs(T) / (2.0 * (1.0 + nu)); }
  double thermal_expansion(double T) const { return alpha(T); }
};

/// Isotropic homogeneous core.
struct CoreMaterial {
  TempPoly E;        // Pa
  double nu = 0.0;
  double rho = 0.0;  // kg/m^3
  TempPoly alpha;    // 1/K

  double youngs(double T) const;
  double shear(double T) const { return youngs(T) / (2.0 * (1.0 + nu)); }
  double thermal_expansion(double T) const { return alpha(T); }
};

/// Load-transfer efficiency factors for the rule of mixtures.
struct EfficiencyParams {
  double eta1 = 1.0;
  double eta2 = 1.0;
  double eta3 = 1.0;
};

enum class Grading {
  Uniform,          // V(z) = V*
  GradedV,          // single layer, V(z) = (1 + 2z/h) V*
  GradedX,          // single layer, V(z) = 2 (2|z|/h) V*
  FacesheetLinear,  // sandwich skin, zero at the core interface, 2V* at the outer surface
};

Grading grading_from_name(const std::string& name);
std::string grading_name(Grading kind);

/// Through-thickness nanotube volume fraction over one layer [z_lo, z_hi].
struct GradingRule {
  Grading kind = Grading::Uniform;
  double v_star = 0.0;
  double z_lo = 0.0;
  double z_hi = 0.0;
  // FacesheetLinear only: z of the layer end that touches the core.
  double core_interface = 0.0;

  double volume_fraction(double z) const;
};

/// Effective orthotropic properties at one through-thickness sample.
struct MaterialPoint {
  double E11 = 0.0;
  double E22 = 0.0;
  double G12 = 0.0;
  double G13 = 0.0;
  double G23 = 0.0;
  double nu12 = 0.0;
  double nu21 = 0.0;
  double alpha11 = 0.0;
  double alpha22 = 0.0;
  double rho = 0.0;
};

/// Rule-of-mixtures homogenization of the reinforced matrix. The Poisson
/// ratio mixes with the layup target fraction v_star rather than the local
/// v_cn, so it is constant through a graded layer.
MaterialPoint effective_properties(const CntMaterial& cnt, const MatrixMaterial& matrix,
                                   const EfficiencyParams& eta, double v_cn, double v_star,
                                   double T);

/// MaterialPoint view of an isotropic solid.
MaterialPoint isotropic_point(double E, double nu, double rho, double alpha);

/// Closure for the transverse-normal stress row of the stiffness matrix.
enum class StretchClosure {
  Reduced,  // plane-stress in-plane block, decoupled Q33 = E22/(1 - nu12 nu21)
  Full3d,   // inverted 3D orthotropic compliance with nu13 = nu23 = nu12, E33 = E22
};

StretchClosure stretch_closure_from_name(const std::string& name);

/// Layer stiffness split into the bending/membrane block acting on
/// (exx, eyy, ezz, gxy) and the transverse-shear block acting on (gxz, gyz).
struct ConstitutiveMatrix {
  Eigen::Matrix4d bm = Eigen::Matrix4d::Zero();
  Eigen::Matrix2d shear = Eigen::Matrix2d::Zero();
};

ConstitutiveMatrix constitutive(const MaterialPoint& mp,
                                StretchClosure closure = StretchClosure::Reduced);

}  // namespace sandplate
