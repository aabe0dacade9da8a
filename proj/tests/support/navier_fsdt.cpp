#include "support/navier_fsdt.hpp"

#include <cmath>
#include <stdexcept>

namespace testsupport {

double simpson(const std::function<double(double)>& f, double z0, double z1, int panels) {
  if (panels % 2) ++panels;
  const double dz = (z1 - z0) / panels;
  double sum = f(z0) + f(z1);
  for (int i = 1; i < panels; ++i) sum += f(z0 + i * dz) * (i % 2 ? 4.0 : 2.0);
  return sum * dz / 3.0;
}

namespace {

double simpson_segments(const std::function<double(double)>& f, const PlateDef& plate) {
  std::vector<double> cuts = {-plate.h / 2.0};
  for (double b : plate.breaks) cuts.push_back(b);
  cuts.push_back(plate.h / 2.0);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    // Stay strictly inside each segment so jumps at the cuts are respected.
    const double eps = 1e-12 * plate.h;
    acc += simpson(f, cuts[i] + eps, cuts[i + 1] - eps, 512);
  }
  return acc;
}

}  // namespace

Resultants integrate_resultants(const PlateDef& plate) {
  Resultants r;
  auto acc = [&plate](const std::function<double(double)>& f) {
    return simpson_segments(f, plate);
  };
  auto Q = [&plate](double z) { return plate.props(z); };

  auto q3 = [&Q](double z) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    const PointProps p = Q(z);
    m(0, 0) = p.Q11;
    m(1, 1) = p.Q22;
    m(0, 1) = m(1, 0) = p.Q12;
    m(2, 2) = p.Q66;
    return m;
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.A(i, j) = acc([&](double z) { return q3(z)(i, j); });
      r.B(i, j) = acc([&](double z) { return q3(z)(i, j) * z; });
      r.D(i, j) = acc([&](double z) { return q3(z)(i, j) * z * z; });
    }
  }
  r.As(0, 0) = plate.kappa * acc([&](double z) { return Q(z).G13; });
  r.As(1, 1) = plate.kappa * acc([&](double z) { return Q(z).G23; });
  r.I0 = acc([&](double z) { return Q(z).rho; });
  r.I1 = acc([&](double z) { return Q(z).rho * z; });
  r.I2 = acc([&](double z) { return Q(z).rho * z * z; });

  const double h = plate.h;
  for (int i = 0; i < 2; ++i) {
    auto qa = [&](double z) {
      const PointProps p = Q(z);
      const double qa0 = p.Q11 * p.a11 + p.Q12 * p.a22;
      const double qa1 = p.Q12 * p.a11 + p.Q22 * p.a22;
      return (i == 0 ? qa0 : qa1) * (2.0 * z / h);
    };
    r.NT(i) = acc([&](double z) { return qa(z); });
    r.MT(i) = acc([&](double z) { return qa(z) * z; });
  }
  return r;
}

namespace {

struct ModeMatrices {
  Eigen::Matrix<double, 5, 5> K;
  Eigen::Matrix<double, 5, 5> M;
};

// Strain amplitude maps for the (m,n) trigonometric ansatz.
ModeMatrices mode_matrices(const PlateDef& plate, const Resultants& r, int m, int n) {
  const double al = m * M_PI / plate.a;
  const double be = n * M_PI / plate.b;

  auto e0 = [al, be](const Eigen::Matrix<double, 5, 1>& q) {
    return Eigen::Vector3d(-al * q(0), -be * q(1), be * q(0) + al * q(1));
  };
  auto e1 = [al, be](const Eigen::Matrix<double, 5, 1>& q) {
    return Eigen::Vector3d(-al * q(3), -be * q(4), be * q(3) + al * q(4));
  };
  auto g = [al, be](const Eigen::Matrix<double, 5, 1>& q) {
    return Eigen::Vector2d(q(3) + al * q(2), q(4) + be * q(2));
  };

  ModeMatrices mm;
  for (int i = 0; i < 5; ++i) {
    Eigen::Matrix<double, 5, 1> ei = Eigen::Matrix<double, 5, 1>::Zero();
    ei(i) = 1.0;
    for (int j = 0; j < 5; ++j) {
      Eigen::Matrix<double, 5, 1> ej = Eigen::Matrix<double, 5, 1>::Zero();
      ej(j) = 1.0;
      mm.K(i, j) = e0(ei).dot(r.A * e0(ej)) + e0(ei).dot(r.B * e1(ej)) +
                   e1(ei).dot(r.B * e0(ej)) + e1(ei).dot(r.D * e1(ej)) +
                   g(ei).dot(r.As * g(ej));
    }
  }
  mm.M.setZero();
  mm.M(0, 0) = mm.M(1, 1) = mm.M(2, 2) = r.I0;
  mm.M(3, 3) = mm.M(4, 4) = r.I2;
  mm.M(0, 3) = mm.M(3, 0) = r.I1;
  mm.M(1, 4) = mm.M(4, 1) = r.I1;
  return mm;
}

}  // namespace

ModeSolution solve_mode_mechanical(const PlateDef& plate, const Resultants& r, int m, int n,
                                   double q_hat) {
  const ModeMatrices mm = mode_matrices(plate, r, m, n);
  Eigen::Matrix<double, 5, 1> f = Eigen::Matrix<double, 5, 1>::Zero();
  f(2) = q_hat;
  const Eigen::Matrix<double, 5, 1> q = mm.K.fullPivLu().solve(f);
  return ModeSolution{m, n, q(0), q(1), q(2), q(3), q(4), q_hat, 0.0};
}

ModeSolution solve_mode_mechanical(const PlateDef& plate, int m, int n, double q_hat) {
  return solve_mode_mechanical(plate, integrate_resultants(plate), m, n, q_hat);
}

ModeSolution solve_mode_thermal(const PlateDef& plate, int m, int n, double T0) {
  const Resultants r = integrate_resultants(plate);
  const ModeMatrices mm = mode_matrices(plate, r, m, n);
  const double al = m * M_PI / plate.a;
  const double be = n * M_PI / plate.b;
  // Work-conjugate thermal force: e0(i).NT + e1(i).MT for each coordinate.
  Eigen::Matrix<double, 5, 1> f;
  f(0) = -al * r.NT(0) * T0;
  f(1) = -be * r.NT(1) * T0;
  f(2) = 0.0;
  f(3) = -al * r.MT(0) * T0;
  f(4) = -be * r.MT(1) * T0;
  const Eigen::Matrix<double, 5, 1> q = mm.K.fullPivLu().solve(f);
  return ModeSolution{m, n, q(0), q(1), q(2), q(3), q(4), 0.0, T0};
}

double center_w0_uniform(const PlateDef& plate, double q0, int max_mode) {
  const Resultants r = integrate_resultants(plate);
  double w = 0.0;
  for (int m = 1; m <= max_mode; m += 2) {
    for (int n = 1; n <= max_mode; n += 2) {
      const double q_hat = 16.0 * q0 / (M_PI * M_PI * m * n);
      const ModeSolution s = solve_mode_mechanical(plate, r, m, n, q_hat);
      w += s.W * std::sin(m * M_PI / 2.0) * std::sin(n * M_PI / 2.0);
    }
  }
  return w;
}

double fundamental_omega(const PlateDef& plate, int max_mode) {
  const Resultants r = integrate_resultants(plate);
  double best = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= max_mode; ++m) {
    for (int n = 1; n <= max_mode; ++n) {
      const ModeMatrices mm = mode_matrices(plate, r, m, n);
      Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(mm.K, mm.M);
      if (ges.info() != Eigen::Success) throw std::runtime_error("oracle: 5x5 eig failed");
      for (int k = 0; k < 5; ++k)
        if (ges.eigenvalues()(k) > 0.0)
          best = std::min(best, std::sqrt(ges.eigenvalues()(k)));
    }
  }
  return best;
}

double displacement_u(const PlateDef& plate, const ModeSolution& s, double x, double y,
                      double z) {
  const double al = s.m * M_PI / plate.a;
  const double be = s.n * M_PI / plate.b;
  return (s.U + z * s.X) * std::cos(al * x) * std::sin(be * y);
}

double displacement_w(const PlateDef& plate, const ModeSolution& s, double x, double y) {
  const double al = s.m * M_PI / plate.a;
  const double be = s.n * M_PI / plate.b;
  return s.W * std::sin(al * x) * std::sin(be * y);
}

namespace {

// In-plane stress amplitudes (factors of sin sin for normal, cos cos for
// shear) at height z, thermal part included.
Eigen::Vector3d stress_amplitudes(const PlateDef& plate, const ModeSolution& s, double z) {
  const double al = s.m * M_PI / plate.a;
  const double be = s.n * M_PI / plate.b;
  const PointProps p = plate.props(z);
  const double exx = -al * (s.U + z * s.X);
  const double eyy = -be * (s.V + z * s.Y);
  const double gxy = be * (s.U + z * s.X) + al * (s.V + z * s.Y);
  double sxx = p.Q11 * exx + p.Q12 * eyy;
  double syy = p.Q12 * exx + p.Q22 * eyy;
  const double sxy = p.Q66 * gxy;
  if (s.T0 != 0.0) {
    const double dT = s.T0 * (2.0 * z / plate.h);  // amplitude of the sin sin field
    sxx -= (p.Q11 * p.a11 + p.Q12 * p.a22) * dT;
    syy -= (p.Q12 * p.a11 + p.Q22 * p.a22) * dT;
  }
  return {sxx, syy, sxy};
}

}  // namespace

double stress_xx(const PlateDef& plate, const ModeSolution& s, double x, double y, double z) {
  const double al = s.m * M_PI / plate.a;
  const double be = s.n * M_PI / plate.b;
  return stress_amplitudes(plate, s, z)(0) * std::sin(al * x) * std::sin(be * y);
}

double stress_xz_equilibrium(const PlateDef& plate, const ModeSolution& s, double x, double y,
                             double z) {
  const double al = s.m * M_PI / plate.a;
  const double be = s.n * M_PI / plate.b;
  auto g = [&](double zz) {
    const Eigen::Vector3d amp = stress_amplitudes(plate, s, zz);
    return al * amp(0) - be * amp(2);  // d(sxx)/dx + d(sxy)/dy amplitude of cos sin
  };
  std::vector<double> cuts = {-plate.h / 2.0};
  for (double b : plate.breaks)
    if (b < z) cuts.push_back(b);
  cuts.push_back(z);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double eps = 1e-12 * plate.h;
    if (cuts[i + 1] - cuts[i] > 2 * eps)
      acc += simpson(g, cuts[i] + eps, cuts[i + 1] - eps, 512);
  }
  return -acc * std::cos(al * x) * std::sin(be * y);
}

// ---------------------------------------------------------------------------
// Constituents
// ---------------------------------------------------------------------------

CntRow cnt_at(double T) {
  const double temps[3] = {300.0, 500.0, 700.0};
  const CntRow rows[3] = {
      {5.6466e12, 7.0800e12, 1.9445e12, 3.4584e-6, 5.1682e-6},
      {5.5308e12, 6.9348e12, 1.9643e12, 4.5361e-6, 5.0189e-6},
      {5.4744e12, 6.8641e12, 1.9644e12, 4.6677e-6, 4.8943e-6},
  };
  if (T < temps[0] || T > temps[2]) throw std::domain_error("cnt_at: T outside table");
  const int hi = T > temps[1] ? 2 : 1;
  const double t = (T - temps[hi - 1]) / (temps[hi] - temps[hi - 1]);
  auto lerp = [t](double a, double b) { return a + t * (b - a); };
  return {lerp(rows[hi - 1].E11, rows[hi].E11), lerp(rows[hi - 1].E22, rows[hi].E22),
          lerp(rows[hi - 1].G12, rows[hi].G12), lerp(rows[hi - 1].a11, rows[hi].a11),
          lerp(rows[hi - 1].a22, rows[hi].a22)};
}

MatrixDef pmpv_at(double) { return {2.1e9, 0.34, 1150.0, 45.0e-6}; }

MatrixDef pmma_at(double T) {
  return {(3.52 - 0.0034 * T) * 1e9, 0.34, 1150.0, 45.0e-6 * (1.0 + 0.0005 * (T - 300.0))};
}

CoreDef titanium_at(double T) {
  return {122.56e9 * (1.0 - 4.586e-4 * T), 0.29, 4429.0,
          7.5788e-6 * (1.0 + 6.638e-4 * T - 3.147e-6 * T * T)};
}

Mixture mix(const CntRow& c, const MatrixDef& m, double eta1, double eta2, double eta3,
            double v_cn, double v_star) {
  const double nu_cn = 0.175;
  const double rho_cn = 1400.0;
  const double v_m = 1.0 - v_cn;
  const double G_m = m.E / (2.0 * (1.0 + m.nu));
  Mixture mx;
  mx.E11 = eta1 * v_cn * c.E11 + v_m * m.E;
  mx.E22 = eta2 / (v_cn / c.E22 + v_m / m.E);
  mx.G12 = eta3 / (v_cn / c.G12 + v_m / G_m);
  mx.G13 = mx.G12;
  mx.G23 = 1.2 * mx.G12;
  mx.nu12 = nu_cn * v_star + m.nu * (1.0 - v_star);
  mx.nu21 = mx.nu12 * mx.E22 / mx.E11;
  mx.rho = rho_cn * v_cn + m.rho * v_m;
  mx.a11 = c.a11 * v_cn + m.alpha * v_m;
  mx.a22 = (1.0 + nu_cn) * v_cn * c.a22 + (1.0 + m.nu) * v_m * m.alpha - mx.nu12 * mx.a11;
  return mx;
}

PointProps plane_stress(const Mixture& mx) {
  const double r = 1.0 - mx.nu12 * mx.nu21;
  return {mx.E11 / r, mx.E22 / r, mx.nu21 * mx.E11 / r, mx.G12,
          mx.G13, mx.G23, mx.rho, mx.a11, mx.a22};
}

PointProps plane_stress_core(const CoreDef& c) {
  const double r = 1.0 - c.nu * c.nu;
  const double G = c.E / (2.0 * (1.0 + c.nu));
  return {c.E / r, c.E / r, c.nu * c.E / r, G, G, G, c.rho, c.alpha, c.alpha};
}

PlateDef single_layer_plate(double a, double b, double h, const std::string& grading,
                            double v_star, double T, double kappa) {
  double eta1 = 0.0, eta2 = 0.0;
  if (v_star == 0.11) {
    eta1 = 0.149;
    eta2 = 0.934;
  } else if (v_star == 0.14) {
    eta1 = 0.150;
    eta2 = 0.941;
  } else if (v_star == 0.17) {
    eta1 = 0.149;
    eta2 = 1.381;
  } else {
    throw std::invalid_argument("single_layer_plate: no efficiency data");
  }
  const double eta3 = eta2;

  PlateDef plate;
  plate.a = a;
  plate.b = b;
  plate.h = h;
  plate.kappa = kappa;
  if (grading == "FG-X") plate.breaks = {0.0};
  plate.props = [=](double z) {
    double v = v_star;
    if (grading == "FG-V") v = (1.0 + 2.0 * z / h) * v_star;
    if (grading == "FG-X") v = 4.0 * std::abs(z) / h * v_star;
    return plane_stress(mix(cnt_at(T), pmpv_at(T), eta1, eta2, eta3, v, v_star));
  };
  return plate;
}

PlateDef sandwich_plate(double a, double b, double h, double core_to_face,
                        const std::string& grading, double v_star, double T, double kappa) {
  double eta1 = 0.0, eta2 = 0.0, eta3 = 0.0;
  if (v_star == 0.12) {
    eta1 = 0.137;
    eta2 = 1.002;
    eta3 = 0.715;
  } else if (v_star == 0.17) {
    eta1 = 0.142;
    eta2 = 1.626;
    eta3 = 1.138;
  } else if (v_star == 0.28) {
    eta1 = 0.141;
    eta2 = 1.585;
    eta3 = 1.109;
  } else {
    throw std::invalid_argument("sandwich_plate: no efficiency data");
  }

  const double h_f = h / (core_to_face + 2.0);
  const double t1 = -h / 2.0 + h_f;
  const double t2 = h / 2.0 - h_f;

  PlateDef plate;
  plate.a = a;
  plate.b = b;
  plate.h = h;
  plate.kappa = kappa;
  plate.breaks = {t1, t2};
  plate.props = [=](double z) {
    if (z > t1 && z < t2) return plane_stress_core(titanium_at(T));
    double v = v_star;
    if (grading == "FG") {
      const double iface = z <= t1 ? t1 : t2;
      v = 2.0 * v_star * std::abs(z - iface) / h_f;
    }
    return plane_stress(mix(cnt_at(T), pmma_at(T), eta1, eta2, eta3, v, v_star));
  };
  return plate;
}

}  // namespace testsupport
