#include "sandplate/materials.hpp"

#include <cmath>
#include <stdexcept>

namespace sandplate {

CntMaterial::CntMaterial(std::vector<double> temperatures, std::vector<CntProperties> rows,
                         double nu12, double rho)
    : temperatures_(std::move(temperatures)), rows_(std::move(rows)), nu12_(nu12), rho_(rho) {
  if (temperatures_.empty() || temperatures_.size() != rows_.size())
    throw std::invalid_argument("CntMaterial: table needs one property row per temperature");
  for (std::size_t i = 1; i < temperatures_.size(); ++i)
    if (temperatures_[i] <= temperatures_[i - 1])
      throw std::invalid_argument("CntMaterial: temperatures must be strictly increasing");
  for (const auto& r : rows_)
    if (r.E11 <= 0.0 || r.E22 <= 0.0 || r.G12 <= 0.0)
      throw std::invalid_argument("CntMaterial: moduli must be positive");
  if (rho_ <= 0.0) throw std::invalid_argument("CntMaterial: density must be positive");
}

CntProperties CntMaterial::at(double T) const {
  if (T < temperatures_.front() || T > temperatures_.back())
    throw std::domain_error("CntMaterial: temperature outside tabulated range");
  std::size_t hi = 1;
  while (hi + 1 < temperatures_.size() && T > temperatures_[hi]) ++hi;
  const std::size_t lo = hi - 1;
  const double span = temperatures_[hi] - temperatures_[lo];
  const double s = (T - temperatures_[lo]) / span;
  const CntProperties& A = rows_[lo];
  const CntProperties& B = rows_[hi];
  auto lerp = [s](double a, double b) { return a + s * (b - a); };
  return CntProperties{lerp(A.E11, B.E11), lerp(A.E22, B.E22), lerp(A.G12, B.G12),
                       lerp(A.alpha11, B.alpha11), lerp(A.alpha22, B.alpha22)};
}

double MatrixMaterial::youngs(double T) const {
  const double e = E(T);
  if (e <= 0.0) throw std::domain_error("MatrixMaterial: non-positive modulus at T");
  return e;
}

double CoreMaterial::youngs(double T) const {
  const double e = E(T);
  if (e <= 0.0) throw std::domain_error("CoreMaterial: non-positive modulus at T");
  return e;
}

Grading grading_from_name(const std::string& name) {
  if (name == "UD") return Grading::Uniform;
  if (name == "FG-V") return Grading::GradedV;
  if (name == "FG-X") return Grading::GradedX;
  if (name == "FG") return Grading::FacesheetLinear;
  throw std::invalid_argument("unknown grading kind: " + name);
}

std::string grading_name(Grading kind) {
  switch (kind) {
    case Grading::Uniform: return "UD";
    case Grading::GradedV: return "FG-V";
    case Grading::GradedX: return "FG-X";
    case Grading::FacesheetLinear: return "FG";
  }
  return "?";
}

double GradingRule::volume_fraction(double z) const {
  const double h = z_hi - z_lo;
  const double tol = 1e-12 * h;
  if (z < z_lo - tol || z > z_hi + tol)
    throw std::domain_error("GradingRule: z outside the layer");
  const double zc = (z_lo + z_hi) / 2.0;
  switch (kind) {
    case Grading::Uniform:
      return v_star;
    case Grading::GradedV:
      return (1.0 + 2.0 * (z - zc) / h) * v_star;
    case Grading::GradedX:
      return 2.0 * (2.0 * std::abs(z - zc) / h) * v_star;
    case Grading::FacesheetLinear:
      return 2.0 * v_star * std::abs(z - core_interface) / h;
  }
  return 0.0;
}

MaterialPoint effective_properties(const CntMaterial& cnt, const MatrixMaterial& matrix,
                                   const EfficiencyParams& eta, double v_cn, double v_star,
                                   double T) {
  if (v_cn < -1e-12 || v_cn > 1.0 + 1e-12)
    throw std::domain_error("effective_properties: v_cn outside [0, 1]");
  v_cn = std::min(1.0, std::max(0.0, v_cn));
  const double v_m = 1.0 - v_cn;

  const CntProperties cp = cnt.at(T);
  const double E_m = matrix.youngs(T);
  const double G_m = matrix.shear(T);
  const double alpha_m = matrix.thermal_expansion(T);

  MaterialPoint mp;
  mp.E11 = eta.eta1 * v_cn * cp.E11 + v_m * E_m;
  mp.E22 = eta.eta2 / (v_cn / cp.E22 + v_m / E_m);
  mp.G12 = eta.eta3 / (v_cn / cp.G12 + v_m / G_m);
  mp.G13 = mp.G12;
  mp.G23 = 1.2 * mp.G12;
  mp.nu12 = cnt.nu12() * v_star + matrix.nu * (1.0 - v_star);
  mp.nu21 = mp.nu12 * mp.E22 / mp.E11;
  mp.rho = cnt.rho() * v_cn + matrix.rho * v_m;
  mp.alpha11 = cp.alpha11 * v_cn + alpha_m * v_m;
  mp.alpha22 = (1.0 + cnt.nu12()) * v_cn * cp.alpha22 + (1.0 + matrix.nu) * v_m * alpha_m -
               mp.nu12 * mp.alpha11;
  return mp;
}

MaterialPoint isotropic_point(double E, double nu, double rho, double alpha) {
  MaterialPoint mp;
  mp.E11 = mp.E22 = E;
  mp.G12 = mp.G13 = mp.G23 = E / (2.0 * (1.0 + nu));
  mp.nu12 = mp.nu21 = nu;
  mp.alpha11 = mp.alpha22 = alpha;
  mp.rho = rho;
  return mp;
}

StretchClosure stretch_closure_from_name(const std::string& name) {
  if (name == "reduced") return StretchClosure::Reduced;
  if (name == "full3d") return StretchClosure::Full3d;
  throw std::invalid_argument("unknown stretch closure: " + name);
}

ConstitutiveMatrix constitutive(const MaterialPoint& mp, StretchClosure closure) {
  const double r = 1.0 - mp.nu12 * mp.nu21;
  if (r <= 0.0) throw std::domain_error("constitutive: 1 - nu12*nu21 must be positive");

  ConstitutiveMatrix q;
  if (closure == StretchClosure::Reduced) {
    q.bm(0, 0) = mp.E11 / r;
    q.bm(1, 1) = mp.E22 / r;
    q.bm(0, 1) = q.bm(1, 0) = mp.nu21 * mp.E11 / r;
    q.bm(2, 2) = mp.E22 / r;
    q.bm(3, 3) = mp.G12;
  } else {
    // 3D orthotropic compliance with E33 = E22 and nu13 = nu23 = nu12.
    const double E33 = mp.E22;
    Eigen::Matrix3d S;
    S << 1.0 / mp.E11, -mp.nu12 / mp.E11, -mp.nu12 / mp.E11,
        -mp.nu12 / mp.E11, 1.0 / mp.E22, -mp.nu12 / mp.E22,
        -mp.nu12 / mp.E11, -mp.nu12 / mp.E22, 1.0 / E33;
    const Eigen::Matrix3d C = S.inverse();
    if (!(C(0, 0) > 0.0 && C(1, 1) > 0.0 && C(2, 2) > 0.0))
      throw std::domain_error("constitutive: non-physical Poisson coupling");
    q.bm.topLeftCorner<3, 3>() = C;
    q.bm(3, 3) = mp.G12;
  }
  q.shear(0, 0) = mp.G13;
  q.shear(1, 1) = mp.G23;
  return q;
}

}  // namespace sandplate
