#pragma once

#include "rtspa/geometry.hpp"
#include "rtspa/material.hpp"

namespace rtspa::apps {

/// Dimensionless calibration gain of the blocking-force estimate.
inline constexpr double kForceGain = 0.1;

/// Pillow face area pressing on the neighbouring unit (mm^2).
double contact_area_mm2(const ActuatorGeometry& geom, double theta1_deg);

/// Qualitative blocking force (N):
///   F = k_F * p * A_contact * max(0, e(p) - g(theta1)) / lever,
/// with the backbone length as lever. Only the trends are meaningful.
double blocking_force(const ActuatorGeometry& geom, const MaterialModel& mat,
                      double theta1_deg, double pressure_mpa,
                      double gain = kForceGain);

}  // namespace rtspa::apps
