#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace rtspa {

struct ConvexHull {
  std::vector<Eigen::Vector3d> vertices;
  /// Outward-oriented triangles indexing `vertices`.
  std::vector<std::array<int, 3>> faces;

  double volume() const;
  bool empty() const { return faces.empty(); }
};

/// Incremental 3D hull. Degenerate input (fewer than four points, or all
/// points coplanar within a relative tolerance of 1e-12) yields an empty hull.
ConvexHull convex_hull(std::span<const Eigen::Vector3d> points);

double convex_hull_volume(std::span<const Eigen::Vector3d> points);

}  // namespace rtspa
