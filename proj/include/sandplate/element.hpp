#pragma once

#include <array>
#include <functional>

#include <Eigen/Dense>

#include "sandplate/layup.hpp"
#include "sandplate/mesh.hpp"
#include "sandplate/theory.hpp"

namespace sandplate {

/// Serendipity Q8 basis at a parent point. d2N columns: (d2/dxi2, d2/deta2,
/// d2/dxideta).
struct ShapeEval {
  std::array<double, 8> N{};
  Eigen::Matrix<double, 8, 2> dN = Eigen::Matrix<double, 8, 2>::Zero();
  Eigen::Matrix<double, 8, 3> d2N = Eigen::Matrix<double, 8, 3>::Zero();
};

ShapeEval quad8_shape(double xi, double eta);

/// Shape derivatives pushed to physical coordinates at one parent point.
struct MappedShape {
  std::array<double, 8> N{};
  Eigen::Matrix<double, 8, 2> dNdx = Eigen::Matrix<double, 8, 2>::Zero();   // d/dx, d/dy
  Eigen::Matrix<double, 8, 3> d2Ndx = Eigen::Matrix<double, 8, 3>::Zero();  // dxx, dyy, dxy
  double detJ = 0.0;
  Eigen::Vector2d xy = Eigen::Vector2d::Zero();
};

/// Throws on a non-positive Jacobian. Second derivatives use the full
/// curvilinear transformation, exact for any isoparametric Q8 mapping.
MappedShape map_shape(const Eigen::Matrix<double, 8, 2>& coords, double xi, double eta,
                      bool second_derivatives = false);

/// Surface load cases. Thermal loading imposes the through-thickness field
/// dT(x,y,z) = T0 * (2z/h) * sin(pi x/a) sin(pi y/b).
struct LoadSpec {
  enum class Kind { SinusoidalPressure, UniformPressure, ThermalSinusoidal };
  Kind kind = Kind::SinusoidalPressure;
  double amplitude = 0.0;  // q0 [Pa] or T0 [K]

  static LoadSpec sinusoidal(double q0) { return {Kind::SinusoidalPressure, q0}; }
  static LoadSpec uniform(double q0) { return {Kind::UniformPressure, q0}; }
  static LoadSpec thermal(double T0) { return {Kind::ThermalSinusoidal, T0}; }

  bool is_thermal() const { return kind == Kind::ThermalSinusoidal; }
};

/// Through-thickness pre-integrated section data for one (layup, T) pair:
/// stiffness blocks over the strain resultants, inertia moments, and the
/// thermal moments of the unit-amplitude (2z/h) temperature shape.
class SectionResultants {
 public:
  static SectionResultants integrate(const Layup& layup, double T, StretchClosure closure,
                                     double shear_correction = 1.0, int points_per_span = 8);

  const Eigen::Matrix<double, 20, 20>& bm() const { return Dbm_; }
  const Eigen::Matrix<double, 8, 8>& shear() const { return Ds_; }
  const Eigen::Matrix<double, 5, 5>& inertia_inplane() const { return Iu_; }
  const Eigen::Matrix<double, 3, 3>& inertia_transverse() const { return Iw_; }
  const Eigen::Matrix<double, 4, 5>& thermal_moments() const { return Tm_; }

  /// 13x13 nodal inertia coupling (inertia moments scattered to dof slots).
  const Eigen::Matrix<double, kNumDofs, kNumDofs>& inertia_coupling() const { return C_; }

  double thickness() const { return h_; }

 private:
  Eigen::Matrix<double, 20, 20> Dbm_ = Eigen::Matrix<double, 20, 20>::Zero();
  Eigen::Matrix<double, 8, 8> Ds_ = Eigen::Matrix<double, 8, 8>::Zero();
  Eigen::Matrix<double, 5, 5> Iu_ = Eigen::Matrix<double, 5, 5>::Zero();
  Eigen::Matrix<double, 3, 3> Iw_ = Eigen::Matrix<double, 3, 3>::Zero();
  Eigen::Matrix<double, 4, 5> Tm_ = Eigen::Matrix<double, 4, 5>::Zero();
  Eigen::Matrix<double, kNumDofs, kNumDofs> C_ =
      Eigen::Matrix<double, kNumDofs, kNumDofs>::Zero();
  double h_ = 0.0;
};

/// Full 104-dof (8 nodes x 13 slots) strain-displacement matrices at a point.
struct BMatrices {
  Eigen::Matrix<double, 20, 104> bm = Eigen::Matrix<double, 20, 104>::Zero();
  Eigen::Matrix<double, 8, 104> shear = Eigen::Matrix<double, 8, 104>::Zero();
};

BMatrices strain_displacement(const MappedShape& sh);

using ElementMatrix = Eigen::Matrix<double, 104, 104>;
using ElementVector = Eigen::Matrix<double, 104, 1>;

/// 3x3 Gauss stiffness over the full 13-dof layout (inactive slots give zero
/// rows/columns; the assembly picks the active ones).
ElementMatrix element_stiffness(const Eigen::Matrix<double, 8, 2>& coords,
                                const SectionResultants& section);

ElementMatrix element_mass(const Eigen::Matrix<double, 8, 2>& coords,
                           const SectionResultants& section);

/// Consistent load vector. Mechanical pressure acts on the top surface
/// z = +h/2 and therefore also forces w1 and the quadratic stretch term.
ElementVector element_load(const Eigen::Matrix<double, 8, 2>& coords,
                           const SectionResultants& section, const LoadSpec& load,
                           const PlateGeometry& geom);

}  // namespace sandplate
