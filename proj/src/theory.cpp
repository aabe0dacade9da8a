#include "sandplate/theory.hpp"

#include <stdexcept>

namespace sandplate {

namespace {

constexpr std::array<const char*, kNumDofs> kDofNames = {
    "u0", "v0", "w0", "theta_x", "theta_y", "w1", "beta_x",
    "beta_y", "gamma_z", "phi_x", "phi_y", "psi_x", "psi_y"};

std::array<bool, kNumDofs> mask_of(std::initializer_list<int> slots) {
  std::array<bool, kNumDofs> m{};
  for (int s : slots) m[static_cast<std::size_t>(s)] = true;
  return m;
}

std::array<TheoryVariant, 6> make_variants() {
  return {
      TheoryVariant{"HSDT13", mask_of({kU0, kV0, kW0, kThetaX, kThetaY, kW1, kBetaX, kBetaY,
                                       kGammaZ, kPhiX, kPhiY, kPsiX, kPsiY})},
      TheoryVariant{"HSDT11A", mask_of({kU0, kV0, kW0, kThetaX, kThetaY, kBetaX, kBetaY, kPhiX,
                                        kPhiY, kPsiX, kPsiY})},
      TheoryVariant{"HSDT11B", mask_of({kU0, kV0, kW0, kThetaX, kThetaY, kW1, kBetaX, kBetaY,
                                        kGammaZ, kPhiX, kPhiY})},
      TheoryVariant{"HSDT9",
                    mask_of({kU0, kV0, kW0, kThetaX, kThetaY, kBetaX, kBetaY, kPhiX, kPhiY})},
      TheoryVariant{"TSDT7", mask_of({kU0, kV0, kW0, kThetaX, kThetaY, kBetaX, kBetaY})},
      TheoryVariant{"FSDT5", mask_of({kU0, kV0, kW0, kThetaX, kThetaY})},
  };
}

}  // namespace

const char* dof_name(int slot) {
  if (slot < 0 || slot >= kNumDofs) throw std::out_of_range("dof_name: bad slot");
  return kDofNames[static_cast<std::size_t>(slot)];
}

int TheoryVariant::active_count() const {
  int n = 0;
  for (bool b : active) n += b ? 1 : 0;
  return n;
}

const std::array<TheoryVariant, 6>& TheoryVariant::all() {
  static const std::array<TheoryVariant, 6> table = make_variants();
  return table;
}

const TheoryVariant& TheoryVariant::by_name(const std::string& name) {
  for (const TheoryVariant& v : all())
    if (v.name == name) return v;
  throw std::invalid_argument("unknown theory variant: " + name);
}

ThicknessBasis thickness_basis(const Layup& layup, double z, Side side) {
  const ZigZagValue zz = layup.zigzag(z, side);
  ThicknessBasis tb;
  tb.f = {1.0, z, z * z, z * z * z, zz.S};
  tb.g = {1.0, z, z * z, zz.dS_dz};
  return tb;
}

Eigen::Vector4d StrainState::bm_at(const ThicknessBasis& tb) const {
  Eigen::Vector4d e = Eigen::Vector4d::Zero();
  for (int m = 0; m < 5; ++m) e += tb.f[static_cast<std::size_t>(m)] * bm[static_cast<std::size_t>(m)];
  return e;
}

Eigen::Vector2d StrainState::shear_at(const ThicknessBasis& tb) const {
  Eigen::Vector2d g = Eigen::Vector2d::Zero();
  for (int n = 0; n < 4; ++n)
    g += tb.g[static_cast<std::size_t>(n)] * shear[static_cast<std::size_t>(n)];
  return g;
}

StrainState evaluate_strains(const TheoryVariant& variant, const DofField& field) {
  DofField f = field;
  for (int s = 0; s < kNumDofs; ++s) {
    if (!variant.is_active(s)) {
      f.value(s) = 0.0;
      f.grad.row(s).setZero();
    }
  }
  const auto vx = [&f](int s) { return f.grad(s, 0); };
  const auto vy = [&f](int s) { return f.grad(s, 1); };

  StrainState st;
  st.bm[0] << vx(kU0), vy(kV0), f.value(kW1), vy(kU0) + vx(kV0);
  st.bm[1] << vx(kThetaX), vy(kThetaY), 2.0 * f.value(kGammaZ), vy(kThetaX) + vx(kThetaY);
  st.bm[2] << vx(kBetaX), vy(kBetaY), 0.0, vy(kBetaX) + vx(kBetaY);
  st.bm[3] << vx(kPhiX), vy(kPhiY), 0.0, vy(kPhiX) + vx(kPhiY);
  st.bm[4] << vx(kPsiX), vy(kPsiY), 0.0, vy(kPsiX) + vx(kPsiY);

  st.shear[0] << f.value(kThetaX) + vx(kW0), f.value(kThetaY) + vy(kW0);
  st.shear[1] << 2.0 * f.value(kBetaX) + vx(kW1), 2.0 * f.value(kBetaY) + vy(kW1);
  st.shear[2] << 3.0 * f.value(kPhiX) + vx(kGammaZ), 3.0 * f.value(kPhiY) + vy(kGammaZ);
  st.shear[3] << f.value(kPsiX), f.value(kPsiY);
  return st;
}

Eigen::Vector3d displacement_expansion(const Eigen::Matrix<double, kNumDofs, 1>& dofs, double z,
                                       const Layup& layup, const TheoryVariant& variant,
                                       Side side) {
  Eigen::Matrix<double, kNumDofs, 1> d = dofs;
  for (int s = 0; s < kNumDofs; ++s)
    if (!variant.is_active(s)) d(s) = 0.0;

  const ThicknessBasis tb = thickness_basis(layup, z, side);
  Eigen::Vector3d uvw;
  uvw(0) = d(kU0) + tb.f[1] * d(kThetaX) + tb.f[2] * d(kBetaX) + tb.f[3] * d(kPhiX) +
           tb.f[4] * d(kPsiX);
  uvw(1) = d(kV0) + tb.f[1] * d(kThetaY) + tb.f[2] * d(kBetaY) + tb.f[3] * d(kPhiY) +
           tb.f[4] * d(kPsiY);
  uvw(2) = d(kW0) + tb.f[1] * d(kW1) + tb.f[2] * d(kGammaZ);
  return uvw;
}

}  // namespace sandplate
