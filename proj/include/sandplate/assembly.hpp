#pragma once

#include <vector>

#include <Eigen/Sparse>

#include "sandplate/element.hpp"

namespace sandplate {

/// Equation numbering for (node, dof-slot) pairs.
class DofMap {
 public:
  static constexpr int kInactive = -1;
  static constexpr int kConstrained = -2;

  DofMap() = default;
  DofMap(std::size_t n_nodes, const TheoryVariant& variant);

  int equation(std::size_t node, int slot) const {
    return table_[node * kNumDofs + static_cast<std::size_t>(slot)];
  }
  bool is_constrained(std::size_t node, int slot) const {
    return equation(node, slot) == kConstrained;
  }
  int equation_count() const { return n_equations_; }
  std::size_t node_count() const { return table_.size() / kNumDofs; }

  /// Marks (node, slot) constrained; renumber() must run afterwards.
  void constrain(std::size_t node, int slot);
  void renumber();

 private:
  std::vector<int> table_;
  int n_equations_ = 0;
};

/// Assembled linear system. K and M act on the unconstrained equations only;
/// constrained dofs are eliminated (row/column removal).
struct GlobalSystem {
  Eigen::SparseMatrix<double> K;
  Eigen::SparseMatrix<double> M;  // empty unless assembled with mass
  Eigen::VectorXd f;
  DofMap dof_map;
  bool has_mass = false;
};

struct AssemblyOptions {
  bool with_mass = false;
  double shear_correction = 1.0;
  StretchClosure closure = StretchClosure::Reduced;
  int thickness_points = 8;
};

/// Scatter-add of element stiffness/mass/load over all active dofs.
/// Boundary conditions are applied afterwards (apply_simply_supported).
GlobalSystem assemble(const Mesh& mesh, const TheoryVariant& variant, const Layup& layup,
                      double temperature, const LoadSpec& load, const PlateGeometry& geom,
                      const AssemblyOptions& options = {});

/// Diaphragm (simply supported) conditions:
///   y = 0, b: u0 = w0 = theta_x = w1 = gamma_z = beta_x = phi_x = psi_x = 0
///   x = 0, a: v0 = w0 = theta_y = w1 = gamma_z = beta_y = phi_y = psi_y = 0
/// intersected with the variant's active set. Returns the reduced system.
GlobalSystem apply_simply_supported(const GlobalSystem& system, const TheoryVariant& variant,
                                    const Mesh& mesh);

/// Constrained slot list for one edge family (exposed for tests).
std::vector<int> simply_supported_slots_x_edges();
std::vector<int> simply_supported_slots_y_edges();

}  // namespace sandplate
