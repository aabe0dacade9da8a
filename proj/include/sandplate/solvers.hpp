#pragma once

#include <Eigen/Sparse>

#include <Eigen/Dense>

namespace sandplate {

struct StaticSolution {
  Eigen::VectorXd delta;
  double relative_residual = 0.0;
};

/// Direct symmetric factor-and-solve; throws if K is not positive definite
/// or the residual exceeds 1e-10 relative.
StaticSolution solve_static(const Eigen::SparseMatrix<double>& K, const Eigen::VectorXd& f);

struct ModalResult {
  Eigen::VectorXd omega;            // rad/s, ascending
  Eigen::MatrixXd modes;            // columns, M-orthonormal
  double max_relative_residual = 0.0;
  double max_orthonormality_error = 0.0;
  int iterations = 0;
};

/// Lowest n_modes of K phi = omega^2 M phi by subspace iteration on the
/// factored K (both operands symmetric positive definite).
ModalResult solve_modes(const Eigen::SparseMatrix<double>& K,
                        const Eigen::SparseMatrix<double>& M, int n_modes);

}  // namespace sandplate
