#include "kerrqc/marching_cubes.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <limits>
#include <unordered_map>

#include "kerrqc/errors.hpp"

namespace kerrqc {
namespace {

// Corner c sits at offset (x, y, z) below; edges join corner pairs.
constexpr int kCorner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                               {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
constexpr int kEdge[12][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                              {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
// Faces as corner cycles, counter-clockwise seen from outside the cube.
constexpr int kFace[6][4] = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                             {3, 7, 6, 2}, {0, 4, 7, 3}, {1, 2, 6, 5}};

int edge_between(int a, int b) {
  for (int e = 0; e < 12; ++e) {
    if ((kEdge[e][0] == a && kEdge[e][1] == b) || (kEdge[e][0] == b && kEdge[e][1] == a)) return e;
  }
  return -1;
}

bool share_face(int e1, int e2) {
  for (const auto& face : kFace) {
    int hits = 0;
    for (int i = 0; i < 4; ++i) {
      const int e = edge_between(face[i], face[(i + 1) % 4]);
      hits += (e == e1) + (e == e2);
    }
    if (hits == 2) return true;
  }
  return false;
}

// Builds the triangle list of one corner mask. On each face, every crossing
// where the boundary walk leaves the inside region is joined to the nearest
// preceding crossing where it entered; on faces with two inside corners on a
// diagonal this keeps the inside corners apart. A shared edge is walked in
// opposite directions by its two faces, so the segments chain into closed
// loops, which are fanned into triangles.
std::vector<std::array<int, 3>> build_case(int mask) {
  auto inside = [mask](int c) { return (mask >> c) & 1; };
  int next_of[12];
  std::fill(std::begin(next_of), std::end(next_of), -1);
  for (const auto& face : kFace) {
    struct Crossing {
      int edge;
      bool leaving;
    };
    std::vector<Crossing> xs;
    for (int i = 0; i < 4; ++i) {
      const int a = face[i];
      const int b = face[(i + 1) % 4];
      if (inside(a) != inside(b)) xs.push_back({edge_between(a, b), inside(a) != 0});
    }
    const int n = static_cast<int>(xs.size());
    for (int i = 0; i < n; ++i) {
      if (!xs[i].leaving) continue;
      for (int back = 1; back < n; ++back) {
        const Crossing& prev = xs[(i - back + n) % n];
        if (!prev.leaving) {
          next_of[xs[i].edge] = prev.edge;
          break;
        }
      }
    }
  }
  std::vector<std::array<int, 3>> tris;
  bool used[12] = {};
  for (int start = 0; start < 12; ++start) {
    if (next_of[start] < 0 || used[start]) continue;
    std::vector<int> loop;
    for (int e = start; !used[e]; e = next_of[e]) {
      used[e] = true;
      loop.push_back(e);
    }
    // Fan from a vertex none of whose diagonals runs along a cube face;
    // otherwise the fan could lay triangles flat in a face shared with the
    // neighbouring cube.
    const std::size_t n = loop.size();
    std::size_t apex = n;
    for (std::size_t a = 0; a < n && apex == n; ++a) {
      bool ok = true;
      for (std::size_t d = 2; d + 1 < n && ok; ++d) ok = !share_face(loop[a], loop[(a + d) % n]);
      if (ok) apex = a;
    }
    if (apex == n) throw std::logic_error("marching cubes: no face-free fan for case " + std::to_string(mask));
    for (std::size_t i = 1; i + 1 < n; ++i) {
      tris.push_back({loop[apex], loop[(apex + i) % n], loop[(apex + i + 1) % n]});
    }
  }
  return tris;
}

Eigen::Vector3d edge_midpoint(int e) {
  const auto& a = kCorner[kEdge[e][0]];
  const auto& b = kCorner[kEdge[e][1]];
  return {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.5 * (a[2] + b[2])};
}

struct CaseTable {
  std::vector<std::array<int, 3>> cases[256];

  CaseTable() {
    for (int m = 0; m < 256; ++m) cases[m] = build_case(m);
    // Orientation: with only corner 0 inside, the normal must point away from it.
    const auto& t = cases[1].front();
    const Eigen::Vector3d p0 = edge_midpoint(t[0]);
    const Eigen::Vector3d normal = (edge_midpoint(t[1]) - p0).cross(edge_midpoint(t[2]) - p0);
    if (normal.dot(p0) < 0.0) {
      for (auto& c : cases) {
        for (auto& tri : c) std::swap(tri[1], tri[2]);
      }
    }
  }
};

const CaseTable& case_table() {
  static const CaseTable table;
  return table;
}

}  // namespace

const std::vector<std::array<int, 3>>& cube_case_triangles(int mask) {
  return case_table().cases[mask & 0xff];
}

IsoMesh extract_isosurface(const ScalarGrid3D& grid, double level, EdgeInterpolation interp) {
  if (grid.values.empty() || grid.values.size() != grid.size()) {
    throw LevelOutOfRangeError("extract_isosurface: grid has no values");
  }
  const auto [lo, hi] = std::minmax_element(grid.values.begin(), grid.values.end());
  if (!(level > *lo && level < *hi)) {
    throw LevelOutOfRangeError("extract_isosurface: level " + std::to_string(level) +
                               " not strictly inside [" + std::to_string(*lo) + ", " + std::to_string(*hi) + "]");
  }
  const CaseTable& table = case_table();
  const auto nx = grid.dims[0], ny = grid.dims[1], nz = grid.dims[2];
  const double min_area = 1e-12 * std::min({grid.spacing[0] * grid.spacing[1], grid.spacing[1] * grid.spacing[2],
                                            grid.spacing[0] * grid.spacing[2]});

  IsoMesh mesh;
  mesh.iso_level = level;
  // Global edge key: lower endpoint node index * 3 + axis.
  std::unordered_map<std::uint64_t, std::uint32_t> vertex_of_edge;

  auto vertex_for = [&](std::int64_t i, std::int64_t j, std::int64_t k, int e) -> std::uint32_t {
    const auto& ca = kCorner[kEdge[e][0]];
    const auto& cb = kCorner[kEdge[e][1]];
    std::int64_t a[3] = {i + ca[0], j + ca[1], k + ca[2]};
    std::int64_t b[3] = {i + cb[0], j + cb[1], k + cb[2]};
    if (a[0] + a[1] + a[2] > b[0] + b[1] + b[2]) std::swap(a, b);
    const int axis = a[0] != b[0] ? 0 : (a[1] != b[1] ? 1 : 2);
    const std::uint64_t key = static_cast<std::uint64_t>(grid.index(a[0], a[1], a[2])) * 3 + axis;
    const auto it = vertex_of_edge.find(key);
    if (it != vertex_of_edge.end()) return it->second;
    const double va = grid.at(a[0], a[1], a[2]);
    const double vb = grid.at(b[0], b[1], b[2]);
    double t = 0.5;
    if (interp == EdgeInterpolation::kLinear && vb != va) t = std::clamp((level - va) / (vb - va), 0.0, 1.0);
    const Eigen::Vector3d pa = grid.node(a[0], a[1], a[2]);
    const Eigen::Vector3d pb = grid.node(b[0], b[1], b[2]);
    const auto id = static_cast<std::uint32_t>(mesh.vertices.size());
    mesh.vertices.push_back(pa + t * (pb - pa));
    vertex_of_edge.emplace(key, id);
    return id;
  };

  for (std::int64_t i = 0; i + 1 < nx; ++i) {
    for (std::int64_t j = 0; j + 1 < ny; ++j) {
      for (std::int64_t k = 0; k + 1 < nz; ++k) {
        int mask = 0;
        for (int c = 0; c < 8; ++c) {
          if (grid.at(i + kCorner[c][0], j + kCorner[c][1], k + kCorner[c][2]) > level) mask |= 1 << c;
        }
        if (mask == 0 || mask == 255) continue;
        for (const auto& tri : table.cases[mask]) {
          const std::array<std::uint32_t, 3> ids = {vertex_for(i, j, k, tri[0]), vertex_for(i, j, k, tri[1]),
                                                    vertex_for(i, j, k, tri[2])};
          const Eigen::Vector3d& p0 = mesh.vertices[ids[0]];
          const double area =
              0.5 * (mesh.vertices[ids[1]] - p0).cross(mesh.vertices[ids[2]] - p0).norm();
          if (area < min_area) continue;
          mesh.triangles.push_back(ids);
        }
      }
    }
  }
  return mesh;
}

namespace {
Eigen::Vector3d mean_vertex(const IsoMesh& mesh) {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& v : mesh.vertices) c += v;
  return mesh.vertices.empty() ? c : Eigen::Vector3d(c / static_cast<double>(mesh.vertices.size()));
}
}  // namespace

double mesh_volume(const IsoMesh& mesh) {
  const Eigen::Vector3d ref = mean_vertex(mesh);
  double vol = 0.0;
  for (const auto& t : mesh.triangles) {
    const Eigen::Vector3d a = mesh.vertices[t[0]] - ref;
    const Eigen::Vector3d b = mesh.vertices[t[1]] - ref;
    const Eigen::Vector3d c = mesh.vertices[t[2]] - ref;
    vol += a.dot(b.cross(c));
  }
  return vol / 6.0;
}

double SolidMoments::axis_ratio() const {
  return std::sqrt(principal_values(2) / principal_values(0));
}

SolidMoments solid_moments(const IsoMesh& mesh) {
  // Signed tetrahedra from a reference point to each triangle.
  const Eigen::Vector3d ref = mean_vertex(mesh);
  double vol = 0.0;
  Eigen::Vector3d first = Eigen::Vector3d::Zero();
  Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
  for (const auto& t : mesh.triangles) {
    const Eigen::Vector3d a = mesh.vertices[t[0]] - ref;
    const Eigen::Vector3d b = mesh.vertices[t[1]] - ref;
    const Eigen::Vector3d c = mesh.vertices[t[2]] - ref;
    const double det = a.dot(b.cross(c));
    const Eigen::Vector3d s = a + b + c;
    vol += det / 6.0;
    first += det / 24.0 * s;
    second += det / 120.0 * (a * a.transpose() + b * b.transpose() + c * c.transpose() + s * s.transpose());
  }
  SolidMoments m;
  m.volume = vol;
  if (vol == 0.0) return m;
  const Eigen::Vector3d cen = first / vol;
  m.centroid = cen + ref;
  m.covariance = second / vol - cen * cen.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m.covariance);
  m.principal_values = solver.eigenvalues();
  m.principal_axes = solver.eigenvectors();
  return m;
}

double radius_ratio(const IsoMesh& mesh, const Eigen::Vector3d& centre) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& v : mesh.vertices) {
    const double r = (v - centre).norm();
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return hi / lo;
}

}  // namespace kerrqc
