#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

#include "sandplate/layup.hpp"

namespace sandplate {

inline constexpr int kNumDofs = 13;

/// Nodal unknowns of the cubic zig-zag displacement field, fixed ordering:
///   u = u0 + z*tx + z^2*bx + z^3*px + S(z)*sx
///   v = v0 + z*ty + z^2*by + z^3*py + S(z)*sy
///   w = w0 + z*w1 + z^2*gz
enum Dof : int {
  kU0 = 0,
  kV0,
  kW0,
  kThetaX,
  kThetaY,
  kW1,
  kBetaX,
  kBetaY,
  kGammaZ,
  kPhiX,
  kPhiY,
  kPsiX,
  kPsiY,
};

const char* dof_name(int slot);

/// One of the six plate models: a named mask over the 13 dofs.
struct TheoryVariant {
  std::string name;
  std::array<bool, kNumDofs> active{};

  bool is_active(int slot) const { return active[static_cast<std::size_t>(slot)]; }
  int active_count() const;

  static const TheoryVariant& by_name(const std::string& name);
  static const std::array<TheoryVariant, 6>& all();
};

/// Thickness expansion weights at a z sample:
///   in-plane strain groups scale with f = {1, z, z^2, z^3, S(z)},
///   transverse-shear groups with g = {1, z, z^2, dS/dz}.
struct ThicknessBasis {
  std::array<double, 5> f{};
  std::array<double, 4> g{};
};

ThicknessBasis thickness_basis(const Layup& layup, double z, Side side = Side::Unspecified);

/// Strain resultants: five 4-vectors (exx, eyy, ezz, gxy) and four 2-vectors
/// (gxz, gyz); physical strains follow from the thickness basis.
struct StrainState {
  std::array<Eigen::Vector4d, 5> bm{Eigen::Vector4d::Zero(), Eigen::Vector4d::Zero(),
                                    Eigen::Vector4d::Zero(), Eigen::Vector4d::Zero(),
                                    Eigen::Vector4d::Zero()};
  std::array<Eigen::Vector2d, 4> shear{Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero(),
                                       Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero()};

  Eigen::Vector4d bm_at(const ThicknessBasis& tb) const;
  Eigen::Vector2d shear_at(const ThicknessBasis& tb) const;
};

/// Pointwise dof values and their in-plane gradients (column 0: d/dx, 1: d/dy).
struct DofField {
  Eigen::Matrix<double, kNumDofs, 1> value = Eigen::Matrix<double, kNumDofs, 1>::Zero();
  Eigen::Matrix<double, kNumDofs, 2> grad = Eigen::Matrix<double, kNumDofs, 2>::Zero();
};

/// Strain resultants of a dof field; dofs masked off by the variant
/// contribute exactly zero.
StrainState evaluate_strains(const TheoryVariant& variant, const DofField& field);

/// Physical displacement (u, v, w) of the expansion at height z.
Eigen::Vector3d displacement_expansion(const Eigen::Matrix<double, kNumDofs, 1>& dofs, double z,
                                       const Layup& layup, const TheoryVariant& variant,
                                       Side side = Side::Unspecified);

}  // namespace sandplate
