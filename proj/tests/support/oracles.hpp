#pragma once

// Independent re-derivations used as test oracles. Nothing here calls into
// the library under test.

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline double rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double deg(double r) { return r * 180.0 / std::numbers::pi; }

// Membrane centre deflection by bisection on p = c E t w^3 / a^4.
inline double membrane_w(double p, double mu, double alpha, double face_side, double t,
                         double c = 3.0) {
  const double e_mod = 1.5 * mu * alpha;
  const double a = face_side / 2.0;
  double lo = 0.0, hi = face_side;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    (c * e_mod * t * mid * mid * mid / (a * a * a * a) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double gap(double L, double W, double theta1_deg) {
  return L * std::cos(rad(theta1_deg)) - W;
}

// Quaternions as {w, x, y, z}.
using Quat = std::array<double, 4>;

inline Quat qmul(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

inline Quat axis_angle(double ax, double ay, double az, double angle_deg) {
  const double h = 0.5 * rad(angle_deg);
  return {std::cos(h), ax * std::sin(h), ay * std::sin(h), az * std::sin(h)};
}

// Twist about local z by swing-twist decomposition.
inline double twist_z(Quat q) {
  if (q[0] < 0.0) {
    for (double& v : q) v = -v;
  }
  return deg(2.0 * std::atan2(q[3], q[0]));
}

// Tip twist of a chain of n-1 equal hinges about (-cos t1, 0, sin t1).
inline double chain_twist(int n_units, double theta1_deg, double phi_deg) {
  Quat q{1.0, 0.0, 0.0, 0.0};
  const Quat h = axis_angle(-std::cos(rad(theta1_deg)), 0.0, std::sin(rad(theta1_deg)), phi_deg);
  for (int k = 1; k < n_units; ++k) q = qmul(q, h);
  return twist_z(q);
}

// Unpressurised Mode 2 tip: the end stubs keep the unit orientation (rotated
// by t1 + t2), the inter-unit segments follow the base line (rotated by t2).
inline std::array<double, 3> sheared_tip(int n_units, double L, double h, double t1, double t2) {
  const double u = rad(t1 + t2), b = rad(t2);
  std::array<double, 3> tip{0.0, 0.0, 0.0};
  tip[0] = h * std::sin(u) + (n_units - 1) * L * std::sin(b);
  tip[2] = h * std::cos(u) + (n_units - 1) * L * std::cos(b);
  return tip;
}

using P3 = std::array<double, 3>;

// Hull volume by brute force: every triple with all points on one side is a
// face; the volume is the sum of cones from the centroid. Needs points in
// general position (no four coplanar).
inline double brute_hull_volume(const std::vector<P3>& pts) {
  auto sub = [](const P3& a, const P3& b) { return P3{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  auto cross = [](const P3& a, const P3& b) {
    return P3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  auto dot = [](const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  P3 c{0, 0, 0};
  for (const auto& p : pts) {
    for (int k = 0; k < 3; ++k) c[k] += p[k] / static_cast<double>(pts.size());
  }
  double vol = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const P3 nrm = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        int pos = 0, neg = 0;
        for (std::size_t m = 0; m < n; ++m) {
          if (m == i || m == j || m == k) continue;
          const double d = dot(nrm, sub(pts[m], pts[i]));
          (d > 0 ? pos : neg)++;
        }
        if (pos == 0 || neg == 0) vol += std::abs(dot(nrm, sub(c, pts[i]))) / 6.0;
      }
    }
  }
  return vol;
}

}  // namespace oracle
