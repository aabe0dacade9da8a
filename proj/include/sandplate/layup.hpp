#pragma once

#include <optional>
#include <vector>

#include "sandplate/materials.hpp"

namespace sandplate {

/// Which side of an interface to evaluate when z sits exactly on one.
enum class Side { Below, Above, Unspecified };

struct CompositeLayerSpec {
  GradingRule grading;
  CntMaterial cnt;
  MatrixMaterial matrix;
  EfficiencyParams eta;
};

struct CoreLayerSpec {
  CoreMaterial core;
};

struct Layer {
  double z0 = 0.0;
  double z1 = 0.0;
  bool is_core = false;
  std::optional<CompositeLayerSpec> composite;
  std::optional<CoreLayerSpec> core;

  double thickness() const { return z1 - z0; }
  double midpoint() const { return 0.5 * (z0 + z1); }
};

struct ZigZagValue {
  double S = 0.0;
  double dS_dz = 0.0;
};

/// Stacking sequence over [-h/2, h/2]. Owns the per-layer material rules and
/// the piecewise-linear zig-zag function (alternating +/-1 at interfaces,
/// numbering from the bottom layer).
class Layup {
 public:
  explicit Layup(std::vector<Layer> layers);

  double thickness() const { return h_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t layer_count() const { return layers_.size(); }

  /// Index of the layer containing z. At an interior interface the side flag
  /// picks the layer; Side::Unspecified there is an error.
  std::size_t layer_index(double z, Side side = Side::Unspecified) const;

  ZigZagValue zigzag(double z, Side side = Side::Unspecified) const;

  /// Effective point properties (graded composite or isotropic core).
  MaterialPoint point_properties(double z, double T, Side side = Side::Unspecified) const;

  /// z-spans for through-thickness integration: layers, split again where the
  /// grading has a slope kink (single-layer FG-X at z = 0). Each span carries
  /// the index of its parent layer.
  struct Span {
    double z0, z1;
    std::size_t layer;
  };
  const std::vector<Span>& integration_spans() const { return spans_; }

  /// True if a homogeneous core layer is present.
  bool has_core() const;
  const CoreMaterial& core_material() const;

 private:
  std::vector<Layer> layers_;
  std::vector<Span> spans_;
  double h_ = 0.0;
};

/// One-layer plate with a UD / FG-V / FG-X distribution.
Layup make_single_layer(double h, Grading kind, double v_star, const CntMaterial& cnt,
                        const MatrixMaterial& matrix, const EfficiencyParams& eta);

/// Three-layer sandwich: reinforced skins of thickness h_f around a
/// homogeneous core, h = h_core + 2 h_f with h_core / h_f = core_to_face.
/// Skins are UD or linearly graded from zero at the core interface to 2V*
/// at the outer surface.
Layup make_sandwich(double h, double core_to_face, Grading facesheet_kind, double v_star,
                    const CntMaterial& cnt, const MatrixMaterial& matrix,
                    const EfficiencyParams& eta, const CoreMaterial& core);

}  // namespace sandplate
