#pragma once

#include <Eigen/Core>

#include <array>
#include <iosfwd>
#include <vector>

#include "curvop/errors.hpp"

namespace curvop {

/// Triangulated closed surface with consistently oriented faces.  Edges are
/// canonical vertex pairs (i < j) in sorted order.
struct TriMesh {
  Eigen::Matrix<double, Eigen::Dynamic, 3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 2>> edges;
};

/// Icosahedron subdivided `level` times (0 <= level <= 5), vertices projected
/// onto the unit sphere.  V = 10 * 4^level + 2.
TriMesh icosphere(int level);

void write_off(const TriMesh& mesh, std::ostream& os);

}  // namespace curvop
