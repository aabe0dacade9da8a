#include "sandplate/layup.hpp"

#include <cmath>
#include <stdexcept>

namespace sandplate {

Layup::Layup(std::vector<Layer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw std::invalid_argument("Layup: needs at least one layer");
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    const Layer& L = layers_[k];
    if (L.z1 <= L.z0) throw std::invalid_argument("Layup: layer with non-positive thickness");
    if (k > 0 && std::abs(L.z0 - layers_[k - 1].z1) > 1e-12 * (L.z1 - L.z0))
      throw std::invalid_argument("Layup: layers must be contiguous");
    if (L.is_core != L.core.has_value() || L.is_core == L.composite.has_value())
      throw std::invalid_argument("Layup: layer payload does not match its kind");
  }
  h_ = layers_.back().z1 - layers_.front().z0;
  if (std::abs(layers_.front().z0 + h_ / 2.0) > 1e-12 * h_)
    throw std::invalid_argument("Layup: stack must be centered on z = 0");

  for (std::size_t k = 0; k < layers_.size(); ++k) {
    const Layer& L = layers_[k];
    const bool kinked = !L.is_core && L.composite->grading.kind == Grading::GradedX;
    const double zc = L.midpoint();
    if (kinked && zc > L.z0 && zc < L.z1) {
      spans_.push_back({L.z0, zc, k});
      spans_.push_back({zc, L.z1, k});
    } else {
      spans_.push_back({L.z0, L.z1, k});
    }
  }
}

std::size_t Layup::layer_index(double z, Side side) const {
  const double tol = 1e-12 * h_;
  if (z < layers_.front().z0 - tol || z > layers_.back().z1 + tol)
    throw std::domain_error("Layup: z outside the plate thickness");
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    const Layer& L = layers_[k];
    // Exactly on an interior interface?
    if (k + 1 < layers_.size() && std::abs(z - L.z1) <= tol) {
      if (side == Side::Below) return k;
      if (side == Side::Above) return k + 1;
      throw std::invalid_argument("Layup: interface z requires an explicit side");
    }
    if (z <= L.z1 + tol) return k;
  }
  return layers_.size() - 1;
}

ZigZagValue Layup::zigzag(double z, Side side) const {
  // S is continuous across interfaces, so either side gives the same value;
  // the slope needs the layer, which Side picks at an interface.
  std::size_t k;
  const double tol = 1e-12 * h_;
  if (side == Side::Unspecified) {
    // Default to the layer below at interior interfaces (S matches anyway).
    k = 0;
    while (k + 1 < layers_.size() && z > layers_[k].z1 + tol) ++k;
    if (z < layers_.front().z0 - tol || z > layers_.back().z1 + tol)
      throw std::domain_error("Layup: z outside the plate thickness");
  } else {
    k = layer_index(z, side);
  }
  const Layer& L = layers_[k];
  const double zk = z - L.midpoint();
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // 2(-1)^k with k starting at 1 at the bottom
  return ZigZagValue{2.0 * sign * zk / L.thickness(), 2.0 * sign / L.thickness()};
}

MaterialPoint Layup::point_properties(double z, double T, Side side) const {
  const Layer& L = layers_[layer_index(z, side)];
  if (L.is_core) {
    const CoreMaterial& c = L.core->core;
    return isotropic_point(c.youngs(T), c.nu, c.rho, c.thermal_expansion(T));
  }
  const CompositeLayerSpec& cs = *L.composite;
  const double v = cs.grading.volume_fraction(std::min(std::max(z, L.z0), L.z1));
  return effective_properties(cs.cnt, cs.matrix, cs.eta, v, cs.grading.v_star, T);
}

bool Layup::has_core() const {
  for (const auto& L : layers_)
    if (L.is_core) return true;
  return false;
}

const CoreMaterial& Layup::core_material() const {
  for (const auto& L : layers_)
    if (L.is_core) return L.core->core;
  throw std::logic_error("Layup: no core layer present");
}

Layup make_single_layer(double h, Grading kind, double v_star, const CntMaterial& cnt,
                        const MatrixMaterial& matrix, const EfficiencyParams& eta) {
  if (h <= 0.0) throw std::invalid_argument("make_single_layer: h must be positive");
  if (kind == Grading::FacesheetLinear)
    throw std::invalid_argument("make_single_layer: facesheet grading needs a sandwich");
  Layer L;
  L.z0 = -h / 2.0;
  L.z1 = h / 2.0;
  L.is_core = false;
  L.composite = CompositeLayerSpec{GradingRule{kind, v_star, L.z0, L.z1, 0.0}, cnt, matrix, eta};
  return Layup({L});
}

Layup make_sandwich(double h, double core_to_face, Grading facesheet_kind, double v_star,
                    const CntMaterial& cnt, const MatrixMaterial& matrix,
                    const EfficiencyParams& eta, const CoreMaterial& core) {
  if (h <= 0.0 || core_to_face <= 0.0)
    throw std::invalid_argument("make_sandwich: h and core_to_face must be positive");
  if (facesheet_kind != Grading::Uniform && facesheet_kind != Grading::FacesheetLinear)
    throw std::invalid_argument("make_sandwich: skins are UD or linearly graded");
  const double h_f = h / (core_to_face + 2.0);
  const double t0 = -h / 2.0;
  const double t1 = t0 + h_f;
  const double t2 = h / 2.0 - h_f;
  const double t3 = h / 2.0;

  Layer bottom;
  bottom.z0 = t0;
  bottom.z1 = t1;
  bottom.composite =
      CompositeLayerSpec{GradingRule{facesheet_kind, v_star, t0, t1, t1}, cnt, matrix, eta};

  Layer mid;
  mid.z0 = t1;
  mid.z1 = t2;
  mid.is_core = true;
  mid.core = CoreLayerSpec{core};

  Layer top;
  top.z0 = t2;
  top.z1 = t3;
  top.composite =
      CompositeLayerSpec{GradingRule{facesheet_kind, v_star, t2, t3, t2}, cnt, matrix, eta};

  return Layup({bottom, mid, top});
}

}  // namespace sandplate
