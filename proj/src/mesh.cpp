#include "sandplate/mesh.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sandplate/element.hpp"

namespace sandplate {

Mesh Mesh::structured_quad8(double a, double b, int nx, int ny) {
  if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("mesh: plate sides must be positive");
  if (nx < 1 || ny < 1) throw std::invalid_argument("mesh: need at least one element per side");

  Mesh mesh;
  const int gx = 2 * nx + 1;
  const int gy = 2 * ny + 1;
  std::vector<int> id(static_cast<std::size_t>(gx * gy), -1);
  auto grid = [gx](int i, int j) { return j * gx + i; };

  for (int j = 0; j < gy; ++j) {
    for (int i = 0; i < gx; ++i) {
      if (i % 2 == 1 && j % 2 == 1) continue;  // no interior serendipity node
      id[static_cast<std::size_t>(grid(i, j))] = static_cast<int>(mesh.nodes.size());
      mesh.nodes.emplace_back(a * i / (2.0 * nx), b * j / (2.0 * ny));
      if (i == 0) mesh.edge_x0.push_back(id[static_cast<std::size_t>(grid(i, j))]);
      if (i == gx - 1) mesh.edge_x1.push_back(id[static_cast<std::size_t>(grid(i, j))]);
      if (j == 0) mesh.edge_y0.push_back(id[static_cast<std::size_t>(grid(i, j))]);
      if (j == gy - 1) mesh.edge_y1.push_back(id[static_cast<std::size_t>(grid(i, j))]);
    }
  }

  for (int ey = 0; ey < ny; ++ey) {
    for (int ex = 0; ex < nx; ++ex) {
      const int i0 = 2 * ex;
      const int j0 = 2 * ey;
      mesh.elements.push_back({id[static_cast<std::size_t>(grid(i0, j0))],
                               id[static_cast<std::size_t>(grid(i0 + 2, j0))],
                               id[static_cast<std::size_t>(grid(i0 + 2, j0 + 2))],
                               id[static_cast<std::size_t>(grid(i0, j0 + 2))],
                               id[static_cast<std::size_t>(grid(i0 + 1, j0))],
                               id[static_cast<std::size_t>(grid(i0 + 2, j0 + 1))],
                               id[static_cast<std::size_t>(grid(i0 + 1, j0 + 2))],
                               id[static_cast<std::size_t>(grid(i0, j0 + 1))]});
    }
  }
  mesh.structured = StructuredInfo{a, b, nx, ny};
  return mesh;
}

Eigen::Matrix<double, 8, 2> Mesh::element_coords(std::size_t e) const {
  Eigen::Matrix<double, 8, 2> xy;
  for (int i = 0; i < 8; ++i)
    xy.row(i) = nodes[static_cast<std::size_t>(elements[e][static_cast<std::size_t>(i)])];
  return xy;
}

namespace {

// Newton inversion of the isoparametric map; returns false if it leaves the
// parent square by more than tol.
bool invert_map(const Eigen::Matrix<double, 8, 2>& xy, double x, double y, double tol,
                double& xi, double& eta) {
  xi = 0.0;
  eta = 0.0;
  for (int it = 0; it < 30; ++it) {
    const ShapeEval sh = quad8_shape(xi, eta);
    Eigen::Vector2d r = -Eigen::Vector2d(x, y);
    Eigen::Matrix2d J = Eigen::Matrix2d::Zero();
    for (int i = 0; i < 8; ++i) {
      r += sh.N[static_cast<std::size_t>(i)] * xy.row(i).transpose();
      J += xy.row(i).transpose() * sh.dN.row(i);  // dx/dxi
    }
    const Eigen::Vector2d step = J.transpose().colPivHouseholderQr().solve(r);
    xi -= step(0);
    eta -= step(1);
    if (step.norm() < 1e-14) break;
  }
  return std::abs(xi) <= 1.0 + tol && std::abs(eta) <= 1.0 + tol;
}

}  // namespace

Mesh::Location Mesh::locate(double x, double y) const {
  if (structured) {
    const auto& s = *structured;
    if (x < -1e-9 * s.a || x > s.a * (1 + 1e-9) || y < -1e-9 * s.b || y > s.b * (1 + 1e-9))
      throw std::domain_error("mesh: query point outside the plate");
    const double fx = std::min(std::max(x / s.a, 0.0), 1.0) * s.nx;
    const double fy = std::min(std::max(y / s.b, 0.0), 1.0) * s.ny;
    const int ex = std::min(static_cast<int>(fx), s.nx - 1);
    const int ey = std::min(static_cast<int>(fy), s.ny - 1);
    const std::size_t e = static_cast<std::size_t>(ey * s.nx + ex);
    double xi, eta;
    invert_map(element_coords(e), x, y, 1e-6, xi, eta);
    return Location{e, std::min(std::max(xi, -1.0), 1.0), std::min(std::max(eta, -1.0), 1.0)};
  }
  for (std::size_t e = 0; e < elements.size(); ++e) {
    double xi, eta;
    if (invert_map(element_coords(e), x, y, 1e-9, xi, eta))
      return Location{e, std::min(std::max(xi, -1.0), 1.0), std::min(std::max(eta, -1.0), 1.0)};
  }
  throw std::domain_error("mesh: query point outside the plate");
}

std::vector<std::size_t> Mesh::elements_containing(double x, double y, double tol) const {
  std::vector<std::size_t> hits;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const Eigen::Matrix<double, 8, 2> xy = element_coords(e);
    const double pad = tol + 1e-9;
    if (x < xy.col(0).minCoeff() - pad * (xy.col(0).maxCoeff() - xy.col(0).minCoeff()) ||
        x > xy.col(0).maxCoeff() + pad * (xy.col(0).maxCoeff() - xy.col(0).minCoeff()) ||
        y < xy.col(1).minCoeff() - pad * (xy.col(1).maxCoeff() - xy.col(1).minCoeff()) ||
        y > xy.col(1).maxCoeff() + pad * (xy.col(1).maxCoeff() - xy.col(1).minCoeff()))
      continue;
    double xi, eta;
    if (invert_map(xy, x, y, tol, xi, eta)) hits.push_back(e);
  }
  return hits;
}

}  // namespace sandplate
