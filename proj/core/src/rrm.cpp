#include "rtspa/rrm.hpp"

#include <cmath>
#include <sstream>

#include "rtspa/angles.hpp"
#include "rtspa/errors.hpp"

namespace rtspa {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Bending: return "bending";
    case Mode::Mode1: return "mode1";
    case Mode::Mode2: return "mode2";
    case Mode::Mixed: return "mixed";
  }
  return "unknown";
}

Mode classify(const MotorState& m) {
  const bool a = m.alpha_a_deg != 0.0;
  const bool b = m.alpha_b_deg != 0.0;
  if (!a && !b) return Mode::Bending;
  if (a && !b) return Mode::Mode1;
  if (!a && b) return Mode::Mode2;
  return Mode::Mixed;
}

TransformState make_transform(double theta1_deg, double theta2_deg) {
  const MotorState m{theta1_deg + theta2_deg, theta2_deg};
  return {theta1_deg, theta2_deg, classify(m)};
}

void check_transform_limits(double theta1_deg, double theta2_deg,
                            const ActuatorGeometry& geom) {
  const double t1 = theta1_max(geom);
  const double t2 = theta2_max(geom);
  if (!(std::abs(theta1_deg) <= t1 + kAngleSlackDeg)) {
    std::ostringstream os;
    os << "unit contact: |theta1| = " << std::abs(theta1_deg) << " deg exceeds theta1_max = "
       << t1 << " deg";
    throw ContactViolation(os.str());
  }
  if (!(std::abs(theta2_deg) <= t2 + kAngleSlackDeg)) {
    std::ostringstream os;
    os << "base contact: |theta2| = " << std::abs(theta2_deg) << " deg exceeds theta2_max = "
       << t2 << " deg";
    throw ContactViolation(os.str());
  }
}

TransformState motors_to_transform(const MotorState& m, const ActuatorGeometry& geom) {
  for (auto [name, value] : {std::pair{"A", m.alpha_a_deg}, std::pair{"B", m.alpha_b_deg}}) {
    if (!(std::abs(value) <= kMotorTravelDeg)) {
      std::ostringstream os;
      os << "motor " << name << " command " << value << " deg outside [-90, 90] deg";
      throw DomainError(os.str());
    }
  }
  TransformState t{m.alpha_a_deg - m.alpha_b_deg, m.alpha_b_deg, classify(m)};
  check_transform_limits(t.theta1_deg, t.theta2_deg, geom);
  return t;
}

MotorState transform_to_motors(const TransformState& t, const ActuatorGeometry& geom) {
  const MotorState m{t.theta1_deg + t.theta2_deg, t.theta2_deg};
  if (!(std::abs(m.alpha_a_deg) <= kMotorTravelDeg)) throw MotorSaturation("A", m.alpha_a_deg);
  if (!(std::abs(m.alpha_b_deg) <= kMotorTravelDeg)) throw MotorSaturation("B", m.alpha_b_deg);
  check_transform_limits(t.theta1_deg, t.theta2_deg, geom);
  return m;
}

}  // namespace rtspa
