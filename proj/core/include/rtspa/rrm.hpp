#pragma once

#include <string_view>

#include "rtspa/geometry.hpp"

namespace rtspa {

// Rigid rotation mechanism: two coaxial servos drive a parallel 4-bar. A
// parallel 4-bar transmits rotation 1:1, so the link lengths drop out and the
// mechanism reduces to a linear map between motor and transformation angles:
//
//   theta2 = alpha_B,  theta1 = alpha_A - alpha_B.
//
// Motor A sets the absolute orientation of the units, motor B the
// orientation of the base line; theta1 is the unit angle relative to the base.

enum class Mode { Bending, Mode1, Mode2, Mixed };

std::string_view to_string(Mode mode);

inline constexpr double kMotorTravelDeg = 90.0;

struct MotorState {
  double alpha_a_deg = 0.0;
  double alpha_b_deg = 0.0;
};

struct TransformState {
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  Mode mode = Mode::Bending;
};

/// Mode implied by which motors are away from their initial position.
Mode classify(const MotorState& motors);

/// Builds a TransformState with the mode label implied by its motor commands.
/// No range checks.
TransformState make_transform(double theta1_deg, double theta2_deg);

/// Throws ContactViolation if either angle exceeds its geometric limit.
void check_transform_limits(double theta1_deg, double theta2_deg,
                            const ActuatorGeometry& geom);

/// Throws DomainError for motors beyond +/-90 deg and ContactViolation when
/// the resulting transformation would close a gap.
TransformState motors_to_transform(const MotorState& motors,
                                   const ActuatorGeometry& geom);

/// Inverse map. Motor saturation is reported before contact violations.
MotorState transform_to_motors(const TransformState& transform,
                               const ActuatorGeometry& geom);

}  // namespace rtspa
