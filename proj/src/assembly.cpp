#include "sandplate/assembly.hpp"

#include <stdexcept>

namespace sandplate {

DofMap::DofMap(std::size_t n_nodes, const TheoryVariant& variant)
    : table_(n_nodes * kNumDofs, kInactive) {
  for (std::size_t n = 0; n < n_nodes; ++n)
    for (int s = 0; s < kNumDofs; ++s)
      if (variant.is_active(s)) table_[n * kNumDofs + static_cast<std::size_t>(s)] = 0;
  renumber();
}

void DofMap::constrain(std::size_t node, int slot) {
  int& e = table_[node * kNumDofs + static_cast<std::size_t>(slot)];
  if (e != kInactive) e = kConstrained;
}

void DofMap::renumber() {
  int next = 0;
  for (int& e : table_)
    if (e != kInactive && e != kConstrained) e = next++;
  n_equations_ = next;
}

GlobalSystem assemble(const Mesh& mesh, const TheoryVariant& variant, const Layup& layup,
                      double temperature, const LoadSpec& load, const PlateGeometry& geom,
                      const AssemblyOptions& options) {
  const SectionResultants section = SectionResultants::integrate(
      layup, temperature, options.closure, options.shear_correction, options.thickness_points);

  GlobalSystem sys;
  sys.dof_map = DofMap(mesh.node_count(), variant);
  sys.has_mass = options.with_mass;
  const int n = sys.dof_map.equation_count();
  sys.f = Eigen::VectorXd::Zero(n);

  std::vector<Eigen::Triplet<double>> kt, mt;
  kt.reserve(mesh.element_count() * 104 * 40);
  if (options.with_mass) mt.reserve(mesh.element_count() * 104 * 40);

  std::vector<int> eq(104);
  for (std::size_t e = 0; e < mesh.element_count(); ++e) {
    const Eigen::Matrix<double, 8, 2> coords = mesh.element_coords(e);
    ElementMatrix Ke;
    ElementMatrix Me;
    ElementVector fe;
    try {
      Ke = element_stiffness(coords, section);
      if (options.with_mass) Me = element_mass(coords, section);
      fe = element_load(coords, section, load, geom);
    } catch (const std::exception& err) {
      throw std::runtime_error("element " + std::to_string(e) + ": " + err.what());
    }

    for (int i = 0; i < 8; ++i) {
      const auto node = static_cast<std::size_t>(mesh.elements[e][static_cast<std::size_t>(i)]);
      for (int s = 0; s < kNumDofs; ++s)
        eq[static_cast<std::size_t>(13 * i + s)] = sys.dof_map.equation(node, s);
    }
    for (int i = 0; i < 104; ++i) {
      const int gi = eq[static_cast<std::size_t>(i)];
      if (gi < 0) continue;
      sys.f(gi) += fe(i);
      for (int j = 0; j < 104; ++j) {
        const int gj = eq[static_cast<std::size_t>(j)];
        if (gj < 0) continue;
        kt.emplace_back(gi, gj, Ke(i, j));
        if (options.with_mass) mt.emplace_back(gi, gj, Me(i, j));
      }
    }
  }

  sys.K.resize(n, n);
  sys.K.setFromTriplets(kt.begin(), kt.end());
  if (options.with_mass) {
    sys.M.resize(n, n);
    sys.M.setFromTriplets(mt.begin(), mt.end());
  }
  return sys;
}

std::vector<int> simply_supported_slots_x_edges() {
  return {kV0, kW0, kThetaY, kW1, kGammaZ, kBetaY, kPhiY, kPsiY};
}

std::vector<int> simply_supported_slots_y_edges() {
  return {kU0, kW0, kThetaX, kW1, kGammaZ, kBetaX, kPhiX, kPsiX};
}

GlobalSystem apply_simply_supported(const GlobalSystem& system, const TheoryVariant& variant,
                                    const Mesh& mesh) {
  GlobalSystem out;
  out.has_mass = system.has_mass;
  out.dof_map = system.dof_map;

  const auto xslots = simply_supported_slots_x_edges();
  const auto yslots = simply_supported_slots_y_edges();
  for (const auto& edge : {mesh.edge_x0, mesh.edge_x1})
    for (int node : edge)
      for (int s : xslots)
        if (variant.is_active(s)) out.dof_map.constrain(static_cast<std::size_t>(node), s);
  for (const auto& edge : {mesh.edge_y0, mesh.edge_y1})
    for (int node : edge)
      for (int s : yslots)
        if (variant.is_active(s)) out.dof_map.constrain(static_cast<std::size_t>(node), s);

  // Old equation -> new equation map, then slice K, M, f.
  std::vector<int> remap(static_cast<std::size_t>(system.dof_map.equation_count()), -1);
  out.dof_map.renumber();
  for (std::size_t node = 0; node < out.dof_map.node_count(); ++node) {
    for (int s = 0; s < kNumDofs; ++s) {
      const int old_eq = system.dof_map.equation(node, s);
      const int new_eq = out.dof_map.equation(node, s);
      if (old_eq >= 0 && new_eq >= 0) remap[static_cast<std::size_t>(old_eq)] = new_eq;
    }
  }

  const int n = out.dof_map.equation_count();
  out.f = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < system.f.size(); ++i)
    if (remap[static_cast<std::size_t>(i)] >= 0)
      out.f(remap[static_cast<std::size_t>(i)]) = system.f(i);

  auto slice = [&remap, n](const Eigen::SparseMatrix<double>& A) {
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(static_cast<std::size_t>(A.nonZeros()));
    for (int k = 0; k < A.outerSize(); ++k) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
        const int r = remap[static_cast<std::size_t>(it.row())];
        const int c = remap[static_cast<std::size_t>(it.col())];
        if (r >= 0 && c >= 0) t.emplace_back(r, c, it.value());
      }
    }
    Eigen::SparseMatrix<double> B(n, n);
    B.setFromTriplets(t.begin(), t.end());
    return B;
  };
  out.K = slice(system.K);
  if (system.has_mass) out.M = slice(system.M);
  return out;
}

}  // namespace sandplate
