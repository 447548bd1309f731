#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kerrqc {

/// Regular grid of samples; values are z-fastest: index (i * ny + j) * nz + k.
struct ScalarGrid3D {
  std::array<std::int64_t, 3> dims{2, 2, 2};
  std::array<double, 3> origin{0.0, 0.0, 0.0};
  std::array<double, 3> spacing{1.0, 1.0, 1.0};
  std::vector<double> values;
  /// Scenario parameters, normalisation peak and time, as key/value text.
  std::map<std::string, std::string> metadata;

  std::size_t index(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return static_cast<std::size_t>((i * dims[1] + j) * dims[2] + k);
  }
  double at(std::int64_t i, std::int64_t j, std::int64_t k) const { return values[index(i, j, k)]; }
  Eigen::Vector3d node(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return {origin[0] + spacing[0] * i, origin[1] + spacing[1] * j, origin[2] + spacing[2] * k};
  }
  std::size_t size() const { return static_cast<std::size_t>(dims[0] * dims[1] * dims[2]); }
};

struct IsoMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  double iso_level = 0.0;
};

enum class EdgeInterpolation { kLinear, kMidpoint };

/// Marching cubes. Nodes with value > level are inside; triangles are wound
/// so their normals point out of the inside region (towards lower values).
/// Vertices on shared cube edges are shared. Triangles with area below
/// 1e-12 spacing^2 are dropped. Throws LevelOutOfRangeError unless
/// min < level < max over the grid.
IsoMesh extract_isosurface(const ScalarGrid3D& grid, double level,
                           EdgeInterpolation interp = EdgeInterpolation::kLinear);

/// Triangles of one cube configuration as triples of cube-edge ids (0..11),
/// for the 8-bit mask of inside corners. Exposed for tests.
const std::vector<std::array<int, 3>>& cube_case_triangles(int mask);

/// Enclosed volume by the divergence theorem.
double mesh_volume(const IsoMesh& mesh);

/// Mass properties of the solid bounded by a closed, outward-wound mesh.
struct SolidMoments {
  double volume = 0.0;
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();  // second central moments / volume
  Eigen::Vector3d principal_values = Eigen::Vector3d::Zero();  // ascending
  Eigen::Matrix3d principal_axes = Eigen::Matrix3d::Identity();  // columns match principal_values

  /// sqrt(largest / smallest principal value): ratio of principal semi-axes.
  double axis_ratio() const;
  Eigen::Vector3d major_axis() const { return principal_axes.col(2); }
};

SolidMoments solid_moments(const IsoMesh& mesh);

/// Largest over smallest vertex distance from the given centre.
double radius_ratio(const IsoMesh& mesh, const Eigen::Vector3d& centre);

}  // namespace kerrqc
