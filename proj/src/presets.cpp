#include "sandplate/presets.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sandplate {

namespace {

std::string efficiency_key(const std::string& matrix_name, double v_star) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s@%.6f", matrix_name.c_str(), v_star);
  return buf;
}

TempPoly poly_from_json(const nlohmann::json& j) {
  TempPoly p;
  p.c0 = j.value("c0", 0.0);
  p.c1 = j.value("c1", 0.0);
  p.c2 = j.value("c2", 0.0);
  p.c3 = j.value("c3", 0.0);
  p.T_ref = j.value("T_ref", 0.0);
  return p;
}

}  // namespace

void MaterialDatabase::add_efficiency(const std::string& matrix_name, double v_star,
                                      EfficiencyParams eta) {
  efficiency_[efficiency_key(matrix_name, v_star)] = eta;
}

const CntMaterial& MaterialDatabase::cnt(const std::string& name) const {
  auto it = cnt_.find(name);
  if (it == cnt_.end()) throw std::invalid_argument("unknown cnt material: " + name);
  return it->second;
}

const MatrixMaterial& MaterialDatabase::matrix(const std::string& name) const {
  auto it = matrix_.find(name);
  if (it == matrix_.end()) throw std::invalid_argument("unknown matrix material: " + name);
  return it->second;
}

const CoreMaterial& MaterialDatabase::core(const std::string& name) const {
  auto it = core_.find(name);
  if (it == core_.end()) throw std::invalid_argument("unknown core material: " + name);
  return it->second;
}

EfficiencyParams MaterialDatabase::efficiency(const std::string& matrix_name,
                                              double v_star) const {
  auto it = efficiency_.find(efficiency_key(matrix_name, v_star));
  if (it == efficiency_.end()) {
    std::ostringstream msg;
    msg << "no efficiency preset for matrix '" << matrix_name << "' at V*=" << v_star
        << "; available:";
    for (const auto& [k, v] : efficiency_) msg << " " << k;
    throw std::invalid_argument(msg.str());
  }
  return it->second;
}

MaterialDatabase MaterialDatabase::builtin() {
  MaterialDatabase db;

  // (10,10) single-walled nanotube, tabulated at 300/500/700 K.
  db.add_cnt("SWCNT-10-10",
             CntMaterial({300.0, 500.0, 700.0},
                         {CntProperties{5.6466e12, 7.0800e12, 1.9445e12, 3.4584e-6, 5.1682e-6},
                          CntProperties{5.5308e12, 6.9348e12, 1.9643e12, 4.5361e-6, 5.0189e-6},
                          CntProperties{5.4744e12, 6.8641e12, 1.9644e12, 4.6677e-6, 4.8943e-6}},
                         0.175, 1400.0));

  // PmPV at room temperature.
  MatrixMaterial pmpv;
  pmpv.E = TempPoly{2.1e9, 0.0, 0.0, 0.0, 0.0};
  pmpv.nu = 0.34;
  pmpv.rho = 1150.0;
  pmpv.alpha = TempPoly{45.0e-6, 0.0, 0.0, 0.0, 0.0};
  db.add_matrix("PmPV", pmpv);

  // PMMA: E = (3.52 - 0.0034 T) GPa, alpha = 45 (1 + 0.0005 dT) 1e-6/K.
  MatrixMaterial pmma;
  pmma.E = TempPoly{3.52e9, -0.0034e9, 0.0, 0.0, 0.0};
  pmma.nu = 0.34;
  pmma.rho = 1150.0;
  pmma.alpha = TempPoly{45.0e-6, 45.0e-6 * 0.0005, 0.0, 0.0, 300.0};
  db.add_matrix("PMMA", pmma);

  // Ti-6Al-4V core.
  CoreMaterial ti;
  ti.E = TempPoly{122.56e9, 122.56e9 * -4.586e-4, 0.0, 0.0, 0.0};
  ti.nu = 0.29;
  ti.rho = 4429.0;
  ti.alpha = TempPoly{7.5788e-6, 7.5788e-6 * 6.638e-4, 7.5788e-6 * -3.147e-6, 0.0, 0.0};
  db.add_core("Ti-6Al-4V", ti);

  // Efficiency sets. The PmPV calibration assumes eta3 = eta2.
  db.add_efficiency("PmPV", 0.11, {0.149, 0.934, 0.934});
  db.add_efficiency("PmPV", 0.14, {0.150, 0.941, 0.941});
  db.add_efficiency("PmPV", 0.17, {0.149, 1.381, 1.381});
  db.add_efficiency("PMMA", 0.12, {0.137, 1.002, 0.715});
  db.add_efficiency("PMMA", 0.17, {0.142, 1.626, 1.138});
  db.add_efficiency("PMMA", 0.28, {0.141, 1.585, 1.109});

  return db;
}

MaterialDatabase MaterialDatabase::from_json_text(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  MaterialDatabase db;

  for (const auto& [name, jc] : j.at("cnt").items()) {
    std::vector<double> temps;
    std::vector<CntProperties> rows;
    for (const auto& row : jc.at("table")) {
      temps.push_back(row.at("T").get<double>());
      rows.push_back(CntProperties{row.at("E11").get<double>(), row.at("E22").get<double>(),
                                   row.at("G12").get<double>(), row.at("alpha11").get<double>(),
                                   row.at("alpha22").get<double>()});
    }
    db.add_cnt(name, CntMaterial(std::move(temps), std::move(rows),
                                 jc.at("nu12").get<double>(), jc.at("rho").get<double>()));
  }
  for (const auto& [name, jm] : j.at("matrix").items()) {
    MatrixMaterial m;
    m.E = poly_from_json(jm.at("E"));
    m.nu = jm.at("nu").get<double>();
    m.rho = jm.at("rho").get<double>();
    m.alpha = poly_from_json(jm.at("alpha"));
    db.add_matrix(name, m);
  }
  for (const auto& [name, jm] : j.at("core").items()) {
    CoreMaterial m;
    m.E = poly_from_json(jm.at("E"));
    m.nu = jm.at("nu").get<double>();
    m.rho = jm.at("rho").get<double>();
    m.alpha = poly_from_json(jm.at("alpha"));
    db.add_core(name, m);
  }
  for (const auto& je : j.at("efficiency")) {
    db.add_efficiency(je.at("matrix").get<std::string>(), je.at("v_star").get<double>(),
                      EfficiencyParams{je.at("eta1").get<double>(), je.at("eta2").get<double>(),
                                       je.at("eta3").get<double>()});
  }
  return db;
}

MaterialDatabase MaterialDatabase::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open material database: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

}  // namespace sandplate
