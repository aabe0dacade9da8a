#pragma once

#include <map>
#include <string>

#include "sandplate/materials.hpp"

namespace sandplate {

/// Named constituents plus efficiency-parameter sets keyed by (matrix, V*).
/// The built-in database carries the bundled benchmark constituents; the same
/// schema can be loaded from a JSON file (see data/materials.json).
class MaterialDatabase {
 public:
  static MaterialDatabase builtin();
  static MaterialDatabase from_json_text(const std::string& text);
  static MaterialDatabase from_file(const std::string& path);

  const CntMaterial& cnt(const std::string& name) const;
  const MatrixMaterial& matrix(const std::string& name) const;
  const CoreMaterial& core(const std::string& name) const;
  EfficiencyParams efficiency(const std::string& matrix_name, double v_star) const;

  void add_cnt(const std::string& name, CntMaterial m) { cnt_[name] = std::move(m); }
  void add_matrix(const std::string& name, MatrixMaterial m) { matrix_[name] = m; }
  void add_core(const std::string& name, CoreMaterial m) { core_[name] = m; }
  void add_efficiency(const std::string& matrix_name, double v_star, EfficiencyParams eta);

 private:
  std::map<std::string, CntMaterial> cnt_;
  std::map<std::string, MatrixMaterial> matrix_;
  std::map<std::string, CoreMaterial> core_;
  // key: matrix name + v_star rounded to 6 decimals
  std::map<std::string, EfficiencyParams> efficiency_;
};

}  // namespace sandplate
