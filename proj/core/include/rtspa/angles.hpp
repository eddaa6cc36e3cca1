#pragma once

#include <cmath>
#include <numbers>
#include <utility>

namespace rtspa {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// Slack used when comparing an angle against a contact limit; covers the
// round-off of arccos evaluated at a limit and fed back in.
inline constexpr double kAngleSlackDeg = 1e-9;

// (sin, cos) of an angle in degrees, exact at integer multiples of 90 deg.
inline std::pair<double, double> sincos_deg(double deg) {
  const double quarter = deg / 90.0;
  if (quarter == std::round(quarter)) {
    long q = static_cast<long>(std::round(quarter)) % 4;
    if (q < 0) q += 4;
    switch (q) {
      case 0: return {0.0, 1.0};
      case 1: return {1.0, 0.0};
      case 2: return {0.0, -1.0};
      default: return {-1.0, 0.0};
    }
  }
  const double rad = deg_to_rad(deg);
  return {std::sin(rad), std::cos(rad)};
}

}  // namespace rtspa
