#include "sandplate/solvers.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace sandplate {

namespace {

// Symmetric Jacobi scaling keeps the very different magnitudes of the
// translational and higher-order dofs from hurting the factorization.
Eigen::VectorXd jacobi_scale(const Eigen::SparseMatrix<double>& K) {
  Eigen::VectorXd d(K.rows());
  for (int i = 0; i < K.rows(); ++i) {
    const double v = K.coeff(i, i);
    d(i) = (v > 0.0) ? 1.0 / std::sqrt(v) : 1.0;
  }
  return d;
}

Eigen::SparseMatrix<double> scaled(const Eigen::SparseMatrix<double>& A,
                                   const Eigen::VectorXd& d) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(A.nonZeros()));
  for (int k = 0; k < A.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
      t.emplace_back(it.row(), it.col(), it.value() * d(it.row()) * d(it.col()));
  Eigen::SparseMatrix<double> B(A.rows(), A.cols());
  B.setFromTriplets(t.begin(), t.end());
  return B;
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  const double big = v.cwiseAbs().maxCoeff();
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8 * big) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

StaticSolution solve_static(const Eigen::SparseMatrix<double>& K, const Eigen::VectorXd& f) {
  if (K.rows() != K.cols() || K.rows() != f.size())
    throw std::invalid_argument("solve_static: dimension mismatch");

  const Eigen::VectorXd d = jacobi_scale(K);
  const Eigen::SparseMatrix<double> Ks = scaled(K, d);
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(Ks);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("solve_static: factorization failed (singular system)");

  const Eigen::VectorXd fs = d.asDiagonal() * f;
  Eigen::VectorXd xs = llt.solve(fs);
  xs += llt.solve(fs - Ks * xs);  // one refinement pass

  StaticSolution sol;
  sol.delta = d.asDiagonal() * xs;
  const double fn = f.norm();
  sol.relative_residual = fn > 0.0 ? (K * sol.delta - f).norm() / fn : 0.0;
  if (sol.relative_residual > 1e-10)
    throw std::runtime_error("solve_static: residual above tolerance, system near-singular");
  return sol;
}

ModalResult solve_modes(const Eigen::SparseMatrix<double>& K,
                        const Eigen::SparseMatrix<double>& M, int n_modes) {
  const int n = static_cast<int>(K.rows());
  if (K.cols() != n || M.rows() != n || M.cols() != n)
    throw std::invalid_argument("solve_modes: dimension mismatch");
  if (n_modes < 1 || n_modes > n) throw std::invalid_argument("solve_modes: bad mode count");

  const Eigen::VectorXd d = jacobi_scale(K);
  const Eigen::SparseMatrix<double> Ks = scaled(K, d);
  const Eigen::SparseMatrix<double> Ms = scaled(M, d);

  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(Ks);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("solve_modes: stiffness factorization failed");

  const int p = std::min(n, std::max(2 * n_modes, n_modes + 8));
  std::mt19937 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd X(n, p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = gauss(rng);

  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd lambda_prev = lambda;
  int iterations = 0;
  const int max_iterations = 200;
  for (int it = 0; it < max_iterations; ++it) {
    iterations = it + 1;
    const Eigen::MatrixXd MX = Ms * X;
    const Eigen::MatrixXd Y = llt.solve(MX);
    const Eigen::MatrixXd Kr = Y.transpose() * MX;  // = Y^T Ks Y
    const Eigen::MatrixXd Mr = Y.transpose() * (Ms * Y);

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(Kr, Mr);
    if (ges.info() != Eigen::Success)
      throw std::runtime_error("solve_modes: Rayleigh-Ritz projection failed at iteration " +
                               std::to_string(iterations));
    X = Y * ges.eigenvectors();
    lambda = ges.eigenvalues();

    bool converged = it > 0;
    for (int j = 0; j < n_modes && converged; ++j) {
      const double rel = std::abs(lambda(j) - lambda_prev(j)) /
                         std::max(std::abs(lambda(j)), 1e-300);
      if (rel > 1e-12) converged = false;
    }
    lambda_prev = lambda;
    if (converged) break;
    if (it == max_iterations - 1)
      throw std::runtime_error("solve_modes: no convergence after " +
                               std::to_string(max_iterations) + " subspace iterations");
  }

  ModalResult out;
  out.iterations = iterations;
  out.omega.resize(n_modes);
  out.modes.resize(n, n_modes);
  for (int j = 0; j < n_modes; ++j) {
    if (lambda(j) <= 0.0)
      throw std::runtime_error("solve_modes: non-positive eigenvalue, system not SPD");
    out.omega(j) = std::sqrt(lambda(j));
    Eigen::VectorXd phi = d.asDiagonal() * X.col(j);  // back to the unscaled metric
    const double mnorm = std::sqrt(phi.dot(M * phi));
    phi /= mnorm;
    fix_sign(phi);
    out.modes.col(j) = phi;
  }

  for (int j = 0; j < n_modes; ++j) {
    const Eigen::VectorXd kphi = K * out.modes.col(j);
    const Eigen::VectorXd r = kphi - out.omega(j) * out.omega(j) * (M * out.modes.col(j));
    out.max_relative_residual =
        std::max(out.max_relative_residual, r.norm() / kphi.norm());
    for (int i = 0; i <= j; ++i) {
      const double g = out.modes.col(i).dot(M * out.modes.col(j));
      const double expected = (i == j) ? 1.0 : 0.0;
      out.max_orthonormality_error = std::max(out.max_orthonormality_error, std::abs(g - expected));
    }
  }
  return out;
}

}  // namespace sandplate
