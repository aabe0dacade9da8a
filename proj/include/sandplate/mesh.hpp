#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace sandplate {

/// Plan geometry and layup ratios; S = a/h is derived.
struct PlateGeometry {
  double a = 0.0;
  double b = 0.0;
  double h = 0.0;

  double aspect() const { return a / h; }
};

/// Structured grid of 8-node serendipity quadrilaterals over the full plate.
/// Local node order: corners (-1,-1),(1,-1),(1,1),(-1,1) then mid-edges
/// (0,-1),(1,0),(0,1),(-1,0).
struct Mesh {
  std::vector<Eigen::Vector2d> nodes;
  std::vector<std::array<int, 8>> elements;
  std::vector<int> edge_x0, edge_x1, edge_y0, edge_y1;  // node ids per plate edge

  // Set when generated structured; speeds up point location.
  struct StructuredInfo {
    double a, b;
    int nx, ny;
  };
  std::optional<StructuredInfo> structured;

  static Mesh structured_quad8(double a, double b, int nx, int ny);

  std::size_t node_count() const { return nodes.size(); }
  std::size_t element_count() const { return elements.size(); }

  Eigen::Matrix<double, 8, 2> element_coords(std::size_t e) const;

  /// Element containing (x, y) plus its parent coordinates. Points on shared
  /// edges resolve to the lowest-index containing element.
  struct Location {
    std::size_t element;
    double xi, eta;
  };
  Location locate(double x, double y) const;

  /// All elements whose closure contains (x, y).
  std::vector<std::size_t> elements_containing(double x, double y, double tol = 1e-9) const;
};

}  // namespace sandplate
