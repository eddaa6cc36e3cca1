#include "rtspa/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <Eigen/Geometry>

namespace rtspa {
namespace {

using Face = std::array<int, 3>;

struct Plane {
  Eigen::Vector3d normal;
  double offset;
};

Plane plane_of(const std::vector<Eigen::Vector3d>& pts, const Face& f) {
  Eigen::Vector3d n = (pts[f[1]] - pts[f[0]]).cross(pts[f[2]] - pts[f[0]]);
  const double len = n.norm();
  if (len > 0.0) n /= len;
  return {n, n.dot(pts[f[0]])};
}

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

double ConvexHull::volume() const {
  double six_v = 0.0;
  for (const auto& f : faces) {
    six_v += vertices[f[0]].dot(vertices[f[1]].cross(vertices[f[2]]));
  }
  return six_v / 6.0;
}

ConvexHull convex_hull(std::span<const Eigen::Vector3d> points) {
  if (points.size() < 4) return {};
  std::vector<Eigen::Vector3d> pts(points.begin(), points.end());

  Eigen::Vector3d lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double scale = (hi - lo).maxCoeff();
  if (!(scale > 0.0)) return {};
  const double eps = 1e-12 * scale;

  // Seed tetrahedron from extreme points.
  const int n = static_cast<int>(pts.size());
  int i0 = 0;
  for (int i = 1; i < n; ++i) {
    if (pts[i].x() < pts[i0].x()) i0 = i;
  }
  int i1 = i0;
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = (pts[i] - pts[i0]).norm();
    if (d > best) best = d, i1 = i;
  }
  if (best <= eps) return {};
  const Eigen::Vector3d dir = (pts[i1] - pts[i0]).normalized();
  int i2 = i0;
  best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = (pts[i] - pts[i0]).cross(dir).norm();
    if (d > best) best = d, i2 = i;
  }
  if (best <= eps) return {};
  const Eigen::Vector3d normal = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
  int i3 = i0;
  best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs((pts[i] - pts[i0]).dot(normal));
    if (d > best) best = d, i3 = i;
  }
  if (best <= eps) return {};

  std::vector<Face> faces{{i0, i1, i2}, {i0, i3, i1}, {i1, i3, i2}, {i2, i3, i0}};
  if ((pts[i3] - pts[i0]).dot(normal) > 0.0) {
    for (auto& f : faces) std::swap(f[1], f[2]);
  }
  std::vector<Plane> planes;
  for (const auto& f : faces) planes.push_back(plane_of(pts, f));

  std::vector<char> visible;
  std::unordered_set<std::uint64_t> visible_edges;
  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    visible.assign(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (planes[f].normal.dot(pts[p]) - planes[f].offset > eps) visible[f] = 1, any = true;
    }
    if (!any) continue;

    visible_edges.clear();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      for (int e = 0; e < 3; ++e) visible_edges.insert(edge_key(faces[f][e], faces[f][(e + 1) % 3]));
    }
    std::vector<Face> next_faces;
    std::vector<Plane> next_planes;
    next_faces.reserve(faces.size() + 8);
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (visible[f]) {
        for (int e = 0; e < 3; ++e) {
          const int a = faces[f][e];
          const int b = faces[f][(e + 1) % 3];
          if (!visible_edges.contains(edge_key(b, a))) {
            const Face nf{a, b, p};
            next_faces.push_back(nf);
            next_planes.push_back(plane_of(pts, nf));
          }
        }
      } else {
        next_faces.push_back(faces[f]);
        next_planes.push_back(planes[f]);
      }
    }
    faces = std::move(next_faces);
    planes = std::move(next_planes);
  }

  // Compact the vertex list.
  ConvexHull hull;
  std::vector<int> remap(pts.size(), -1);
  for (auto& f : faces) {
    for (int& v : f) {
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(hull.vertices.size());
        hull.vertices.push_back(pts[v]);
      }
      v = remap[v];
    }
  }
  hull.faces = std::move(faces);
  return hull;
}

double convex_hull_volume(std::span<const Eigen::Vector3d> points) {
  return convex_hull(points).volume();
}

}  // namespace rtspa
