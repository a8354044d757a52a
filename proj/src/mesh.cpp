#include "curvop/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

#include "curvop/digest.hpp"

namespace curvop {

namespace {

using Vec3 = Eigen::RowVector3d;

void collect_edges(TriMesh& mesh) {
  std::set<std::array<int, 2>> edge_set;
  for (const auto& tri : mesh.triangles)
    for (int e = 0; e < 3; ++e) {
      int a = tri[e], b = tri[(e + 1) % 3];
      edge_set.insert({std::min(a, b), std::max(a, b)});
    }
  mesh.edges.assign(edge_set.begin(), edge_set.end());
}

}  // namespace

TriMesh icosphere(int level) {
  if (level < 0 || level > 5) throw DimensionError("icosphere: level must be in [0, 5]");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& v : verts) v.normalize();
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int step = 0; step < level; ++step) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec3 m = (verts[a] + verts[b]).normalized();
      verts.push_back(m);
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  TriMesh mesh;
  mesh.vertices.resize(static_cast<Eigen::Index>(verts.size()), 3);
  for (size_t i = 0; i < verts.size(); ++i) mesh.vertices.row(static_cast<Eigen::Index>(i)) = verts[i];
  mesh.triangles = std::move(faces);
  collect_edges(mesh);
  return mesh;
}

void write_off(const TriMesh& mesh, std::ostream& os) {
  os << "OFF\n"
     << mesh.vertices.rows() << " " << mesh.triangles.size() << " " << mesh.edges.size()
     << "\n";
  for (Eigen::Index v = 0; v < mesh.vertices.rows(); ++v)
    os << format_g17(mesh.vertices(v, 0)) << " " << format_g17(mesh.vertices(v, 1)) << " "
       << format_g17(mesh.vertices(v, 2)) << "\n";
  for (const auto& tri : mesh.triangles)
    os << "3 " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
}

}  // namespace curvop
