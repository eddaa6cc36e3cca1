#pragma once

#include <string_view>
#include <vector>

#include "rtspa/apps/command_sequence.hpp"

namespace rtspa::apps {

// Quadruped with four actuators as legs. Leg i points radially outward at
// yaw i * 90 deg; its backbone lies along the radial direction, bending
// presses the tip down, and the shear direction of the base line is the
// clockwise tangent. Legs 0/2 and 1/3 are the opposing pairs.

enum class GaitDirection { PlusX, MinusX, PlusY, MinusY, Clockwise, CounterClockwise };

std::string_view to_string(GaitDirection direction);
/// "+x", "-x", "+y", "-y", "cw", "ccw". Throws DomainError.
GaitDirection parse_gait_direction(std::string_view text);

struct GaitParams {
  double pressure_mpa = 0.5;
  double period_s = 2.0;
  /// Duration of the one-off re-orientation prelude (y and turning gaits).
  double reorient_s = 1.0;
  /// Mixed-mode lean of the base line (theta2 with theta1 held at zero).
  double lean_deg = 30.0;
  /// Mode 1 unit rotation used for turning; negative means theta1_max.
  double turn_theta1_deg = -1.0;
  double body_radius_mm = 40.0;
};

/// One cycle: configure (p = 0), pressurise to `pressure_mpa` at half period,
/// exhaust at the full period.
///  - +x/-x: all angles zero, the leading leg (0 or 2) is pressurised.
///  - +y/-y: all four legs re-oriented in Mixed mode, legs 0 and 2 drive.
///  - cw/ccw: legs 1 and 3 set perpendicular in Mixed mode, Mode 1 cycles on
///    legs 0 and 2.
CommandSequence gait_plan(GaitDirection direction,
                          const ActuatorGeometry& geom = {},
                          const GaitParams& params = {});

struct PlanarPose {
  double t_s = 0.0;
  double x_mm = 0.0;
  double y_mm = 0.0;
  double yaw_deg = 0.0;
};

/// Anchored-foot model. A foot whose pressure rises is pinned; the body then
/// moves by the rigid planar transform that keeps the pinned feet in place
/// (the mean stance-tip displacement when there is no rotation). Feet whose
/// pressure holds or drops slide freely and the body does not move.
/// Returns the pose after the prelude and after every keyframe of every cycle.
std::vector<PlanarPose> simulate_gait(const ActuatorModel& model,
                                      const CommandSequence& seq, int cycles,
                                      const GaitParams& params = {});

}  // namespace rtspa::apps
