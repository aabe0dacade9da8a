#include "sandplate/element.hpp"

#include <cmath>
#include <stdexcept>

#include "sandplate/quadrature.hpp"

namespace sandplate {

ShapeEval quad8_shape(double xi, double eta) {
  static constexpr std::array<double, 8> XI = {-1, 1, 1, -1, 0, 1, 0, -1};
  static constexpr std::array<double, 8> ETA = {-1, -1, 1, 1, -1, 0, 1, 0};

  ShapeEval sh;
  for (int i = 0; i < 8; ++i) {
    const double xi_i = XI[static_cast<std::size_t>(i)];
    const double eta_i = ETA[static_cast<std::size_t>(i)];
    const double X = xi * xi_i;
    const double Y = eta * eta_i;
    if (xi_i != 0.0 && eta_i != 0.0) {
      sh.N[static_cast<std::size_t>(i)] = 0.25 * (1 + X) * (1 + Y) * (X + Y - 1);
      sh.dN(i, 0) = 0.25 * xi_i * (1 + Y) * (2 * X + Y);
      sh.dN(i, 1) = 0.25 * eta_i * (1 + X) * (X + 2 * Y);
      sh.d2N(i, 0) = 0.5 * (1 + Y);
      sh.d2N(i, 1) = 0.5 * (1 + X);
      sh.d2N(i, 2) = 0.25 * xi_i * eta_i * (2 * X + 2 * Y + 1);
    } else if (xi_i == 0.0) {
      sh.N[static_cast<std::size_t>(i)] = 0.5 * (1 - xi * xi) * (1 + Y);
      sh.dN(i, 0) = -xi * (1 + Y);
      sh.dN(i, 1) = 0.5 * eta_i * (1 - xi * xi);
      sh.d2N(i, 0) = -(1 + Y);
      sh.d2N(i, 1) = 0.0;
      sh.d2N(i, 2) = -xi * eta_i;
    } else {
      sh.N[static_cast<std::size_t>(i)] = 0.5 * (1 + X) * (1 - eta * eta);
      sh.dN(i, 0) = 0.5 * xi_i * (1 - eta * eta);
      sh.dN(i, 1) = -eta * (1 + X);
      sh.d2N(i, 0) = 0.0;
      sh.d2N(i, 1) = -(1 + X);
      sh.d2N(i, 2) = -eta * xi_i;
    }
  }
  return sh;
}

MappedShape map_shape(const Eigen::Matrix<double, 8, 2>& coords, double xi, double eta,
                      bool second_derivatives) {
  const ShapeEval sh = quad8_shape(xi, eta);

  Eigen::Matrix2d J = Eigen::Matrix2d::Zero();  // J(r,s) = d x_s / d xi_r
  for (int i = 0; i < 8; ++i) {
    J(0, 0) += sh.dN(i, 0) * coords(i, 0);
    J(0, 1) += sh.dN(i, 0) * coords(i, 1);
    J(1, 0) += sh.dN(i, 1) * coords(i, 0);
    J(1, 1) += sh.dN(i, 1) * coords(i, 1);
  }
  const double det = J.determinant();
  if (det <= 0.0) throw std::runtime_error("element: non-positive Jacobian (inverted element)");

  MappedShape out;
  out.N = sh.N;
  out.detJ = det;
  const Eigen::Matrix2d Jinv = J.inverse();
  out.dNdx = sh.dN * Jinv;  // [dN/dx dN/dy] = [dN/dxi dN/deta] * J^-1
  for (int i = 0; i < 8; ++i) out.xy += sh.N[static_cast<std::size_t>(i)] * coords.row(i).transpose();

  if (second_derivatives) {
    // Hessian of the geometry map.
    Eigen::Matrix<double, 3, 2> H = Eigen::Matrix<double, 3, 2>::Zero();  // rows: xx, ee, xe
    for (int i = 0; i < 8; ++i) {
      H(0, 0) += sh.d2N(i, 0) * coords(i, 0);
      H(0, 1) += sh.d2N(i, 0) * coords(i, 1);
      H(1, 0) += sh.d2N(i, 1) * coords(i, 0);
      H(1, 1) += sh.d2N(i, 1) * coords(i, 1);
      H(2, 0) += sh.d2N(i, 2) * coords(i, 0);
      H(2, 1) += sh.d2N(i, 2) * coords(i, 1);
    }
    // T maps (u_xx, u_yy, u_xy) to (u_xixi, u_etaeta, u_xieta).
    Eigen::Matrix3d T;
    T << J(0, 0) * J(0, 0), J(0, 1) * J(0, 1), 2 * J(0, 0) * J(0, 1),
        J(1, 0) * J(1, 0), J(1, 1) * J(1, 1), 2 * J(1, 0) * J(1, 1),
        J(0, 0) * J(1, 0), J(0, 1) * J(1, 1), J(0, 0) * J(1, 1) + J(0, 1) * J(1, 0);
    const Eigen::Matrix3d Tinv = T.inverse();
    for (int i = 0; i < 8; ++i) {
      Eigen::Vector3d rhs(sh.d2N(i, 0) - H(0, 0) * out.dNdx(i, 0) - H(0, 1) * out.dNdx(i, 1),
                          sh.d2N(i, 1) - H(1, 0) * out.dNdx(i, 0) - H(1, 1) * out.dNdx(i, 1),
                          sh.d2N(i, 2) - H(2, 0) * out.dNdx(i, 0) - H(2, 1) * out.dNdx(i, 1));
      out.d2Ndx.row(i) = (Tinv * rhs).transpose();
    }
  }
  return out;
}

SectionResultants SectionResultants::integrate(const Layup& layup, double T,
                                               StretchClosure closure, double shear_correction,
                                               int points_per_span) {
  SectionResultants s;
  s.h_ = layup.thickness();
  const GaussRule& rule = gauss_rule(points_per_span);

  for (const Layup::Span& span : layup.integration_spans()) {
    const double mid = 0.5 * (span.z0 + span.z1);
    const double half = 0.5 * (span.z1 - span.z0);
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double z = mid + half * rule.points[q];
      const double w = half * rule.weights[q];
      // Midpoint side keeps interface samples inside the span's layer.
      const Side side = (z < mid) ? Side::Above : Side::Below;
      const MaterialPoint mp = layup.point_properties(z, T, side);
      const ConstitutiveMatrix Q = constitutive(mp, closure);
      const ThicknessBasis tb = thickness_basis(layup, z, side);

      for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 5; ++n)
          s.Dbm_.block<4, 4>(4 * m, 4 * n) +=
              w * tb.f[static_cast<std::size_t>(m)] * tb.f[static_cast<std::size_t>(n)] * Q.bm;
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          s.Ds_.block<2, 2>(2 * m, 2 * n) += w * shear_correction *
                                             tb.g[static_cast<std::size_t>(m)] *
                                             tb.g[static_cast<std::size_t>(n)] * Q.shear;
      for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 5; ++n)
          s.Iu_(m, n) +=
              w * mp.rho * tb.f[static_cast<std::size_t>(m)] * tb.f[static_cast<std::size_t>(n)];
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
          s.Iw_(m, n) +=
              w * mp.rho * tb.f[static_cast<std::size_t>(m)] * tb.f[static_cast<std::size_t>(n)];

      const Eigen::Vector4d alpha(mp.alpha11, mp.alpha22, 0.0, 0.0);
      const double shape = 2.0 * z / s.h_;
      const Eigen::Vector4d qa = Q.bm * alpha * shape;
      for (int m = 0; m < 5; ++m) s.Tm_.col(m) += w * tb.f[static_cast<std::size_t>(m)] * qa;
    }
  }

  static constexpr std::array<int, 5> kUSlots = {kU0, kThetaX, kBetaX, kPhiX, kPsiX};
  static constexpr std::array<int, 5> kVSlots = {kV0, kThetaY, kBetaY, kPhiY, kPsiY};
  static constexpr std::array<int, 3> kWSlots = {kW0, kW1, kGammaZ};
  for (int m = 0; m < 5; ++m) {
    for (int n = 0; n < 5; ++n) {
      s.C_(kUSlots[static_cast<std::size_t>(m)], kUSlots[static_cast<std::size_t>(n)]) +=
          s.Iu_(m, n);
      s.C_(kVSlots[static_cast<std::size_t>(m)], kVSlots[static_cast<std::size_t>(n)]) +=
          s.Iu_(m, n);
    }
  }
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n)
      s.C_(kWSlots[static_cast<std::size_t>(m)], kWSlots[static_cast<std::size_t>(n)]) +=
          s.Iw_(m, n);
  return s;
}

BMatrices strain_displacement(const MappedShape& sh) {
  BMatrices B;
  for (int i = 0; i < 8; ++i) {
    const int c = 13 * i;
    const double N = sh.N[static_cast<std::size_t>(i)];
    const double Nx = sh.dNdx(i, 0);
    const double Ny = sh.dNdx(i, 1);

    // eps0: (u0,x ; v0,y ; w1 ; u0,y + v0,x)
    B.bm(0, c + kU0) = Nx;
    B.bm(1, c + kV0) = Ny;
    B.bm(2, c + kW1) = N;
    B.bm(3, c + kU0) = Ny;
    B.bm(3, c + kV0) = Nx;
    // eps1: (tx,x ; ty,y ; 2 gz ; tx,y + ty,x)
    B.bm(4, c + kThetaX) = Nx;
    B.bm(5, c + kThetaY) = Ny;
    B.bm(6, c + kGammaZ) = 2.0 * N;
    B.bm(7, c + kThetaX) = Ny;
    B.bm(7, c + kThetaY) = Nx;
    // eps2 (beta), eps3 (phi), eps4 (psi): same membrane pattern
    B.bm(8, c + kBetaX) = Nx;
    B.bm(9, c + kBetaY) = Ny;
    B.bm(11, c + kBetaX) = Ny;
    B.bm(11, c + kBetaY) = Nx;
    B.bm(12, c + kPhiX) = Nx;
    B.bm(13, c + kPhiY) = Ny;
    B.bm(15, c + kPhiX) = Ny;
    B.bm(15, c + kPhiY) = Nx;
    B.bm(16, c + kPsiX) = Nx;
    B.bm(17, c + kPsiY) = Ny;
    B.bm(19, c + kPsiX) = Ny;
    B.bm(19, c + kPsiY) = Nx;

    // gamma0: (tx + w0,x ; ty + w0,y)
    B.shear(0, c + kThetaX) = N;
    B.shear(0, c + kW0) = Nx;
    B.shear(1, c + kThetaY) = N;
    B.shear(1, c + kW0) = Ny;
    // gamma1: (2 bx + w1,x ; 2 by + w1,y)
    B.shear(2, c + kBetaX) = 2.0 * N;
    B.shear(2, c + kW1) = Nx;
    B.shear(3, c + kBetaY) = 2.0 * N;
    B.shear(3, c + kW1) = Ny;
    // gamma2: (3 px + gz,x ; 3 py + gz,y)
    B.shear(4, c + kPhiX) = 3.0 * N;
    B.shear(4, c + kGammaZ) = Nx;
    B.shear(5, c + kPhiY) = 3.0 * N;
    B.shear(5, c + kGammaZ) = Ny;
    // gamma3: (psi_x ; psi_y), scaled by dS/dz in the section integrals
    B.shear(6, c + kPsiX) = N;
    B.shear(7, c + kPsiY) = N;
  }
  return B;
}

ElementMatrix element_stiffness(const Eigen::Matrix<double, 8, 2>& coords,
                                const SectionResultants& section) {
  ElementMatrix K = ElementMatrix::Zero();
  const GaussRule& rule = gauss_rule(3);
  for (std::size_t qa = 0; qa < rule.points.size(); ++qa) {
    for (std::size_t qb = 0; qb < rule.points.size(); ++qb) {
      const MappedShape sh = map_shape(coords, rule.points[qa], rule.points[qb]);
      const double w = rule.weights[qa] * rule.weights[qb] * sh.detJ;
      const BMatrices B = strain_displacement(sh);
      K.noalias() += w * (B.bm.transpose() * section.bm() * B.bm +
                          B.shear.transpose() * section.shear() * B.shear);
    }
  }
  K = 0.5 * (K + K.transpose()).eval();
  return K;
}

ElementMatrix element_mass(const Eigen::Matrix<double, 8, 2>& coords,
                           const SectionResultants& section) {
  ElementMatrix M = ElementMatrix::Zero();
  const GaussRule& rule = gauss_rule(3);
  const auto& C = section.inertia_coupling();
  for (std::size_t qa = 0; qa < rule.points.size(); ++qa) {
    for (std::size_t qb = 0; qb < rule.points.size(); ++qb) {
      const MappedShape sh = map_shape(coords, rule.points[qa], rule.points[qb]);
      const double w = rule.weights[qa] * rule.weights[qb] * sh.detJ;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          M.block<kNumDofs, kNumDofs>(13 * i, 13 * j) +=
              (w * sh.N[static_cast<std::size_t>(i)] * sh.N[static_cast<std::size_t>(j)]) * C;
    }
  }
  M = 0.5 * (M + M.transpose()).eval();
  return M;
}

ElementVector element_load(const Eigen::Matrix<double, 8, 2>& coords,
                           const SectionResultants& section, const LoadSpec& load,
                           const PlateGeometry& geom) {
  ElementVector f = ElementVector::Zero();
  const GaussRule& rule = gauss_rule(3);
  const double h = section.thickness();
  for (std::size_t qa = 0; qa < rule.points.size(); ++qa) {
    for (std::size_t qb = 0; qb < rule.points.size(); ++qb) {
      const MappedShape sh = map_shape(coords, rule.points[qa], rule.points[qb]);
      const double w = rule.weights[qa] * rule.weights[qb] * sh.detJ;
      const double sxy =
          std::sin(M_PI * sh.xy(0) / geom.a) * std::sin(M_PI * sh.xy(1) / geom.b);
      switch (load.kind) {
        case LoadSpec::Kind::UniformPressure:
        case LoadSpec::Kind::SinusoidalPressure: {
          const double q =
              load.kind == LoadSpec::Kind::UniformPressure ? load.amplitude : load.amplitude * sxy;
          for (int i = 0; i < 8; ++i) {
            const double Nq = w * q * sh.N[static_cast<std::size_t>(i)];
            f(13 * i + kW0) += Nq;
            f(13 * i + kW1) += Nq * (h / 2.0);
            f(13 * i + kGammaZ) += Nq * (h * h / 4.0);
          }
          break;
        }
        case LoadSpec::Kind::ThermalSinusoidal: {
          const double amp = load.amplitude * sxy;
          const BMatrices B = strain_displacement(sh);
          const auto& Tm = section.thermal_moments();
          for (int m = 0; m < 5; ++m)
            f.noalias() += (w * amp) * (B.bm.middleRows<4>(4 * m).transpose() * Tm.col(m));
          break;
        }
      }
    }
  }
  return f;
}

}  // namespace sandplate
