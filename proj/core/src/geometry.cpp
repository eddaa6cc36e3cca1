#include "rtspa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rtspa/angles.hpp"
#include "rtspa/errors.hpp"

namespace rtspa {
namespace {

std::string describe(double lhs, const char* op, double rhs) {
  std::ostringstream os;
  os << lhs << ' ' << op << ' ' << rhs;
  return os.str();
}

ValidationCheck positive(const char* name, double value) {
  return {std::string(name) + " > 0", value > 0.0, describe(value, ">", 0.0)};
}

}  // namespace

MotorSaturation::MotorSaturation(std::string motor, double required_deg)
    : Error("motor " + motor + " saturated: required " + std::to_string(required_deg) +
            " deg exceeds +/-90 deg travel"),
      motor_(std::move(motor)),
      required_deg_(required_deg) {}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name + " (" + c.detail + ")");
  }
  return out;
}

ValidationReport validate(const ActuatorGeometry& g) {
  ValidationReport r;
  const double W = g.unit_width_mm;
  const double L = g.unit_pitch_mm;
  r.checks.push_back(positive("W", W));
  r.checks.push_back(positive("L", L));
  r.checks.push_back(positive("G", g.base_spacing_mm));
  r.checks.push_back(positive("B", g.base_width_mm));
  r.checks.push_back(positive("unit_height", g.unit_height_mm));
  r.checks.push_back(positive("face_side", g.face_side_mm));
  r.checks.push_back(positive("wall_thickness", g.wall_thickness_mm));
  r.checks.push_back(positive("p_max", g.p_max_mpa));
  r.checks.push_back({"W < L", W < L, describe(W, "<", L)});
  r.checks.push_back({"B < L", g.base_width_mm < L, describe(g.base_width_mm, "<", L)});
  r.checks.push_back({"G > L - W", g.base_spacing_mm > L - W,
                      describe(g.base_spacing_mm, ">", L - W)});
  r.checks.push_back({"n_units >= 2", g.n_units >= 2,
                      describe(g.n_units, ">=", 2)});
  return r;
}

void require_valid(const ActuatorGeometry& geom) {
  const auto report = validate(geom);
  if (report.ok()) return;
  std::string msg = "invalid actuator geometry:";
  for (const auto& f : report.failures()) msg += " " + f + ";";
  throw ConfigError(msg);
}

double theta1_max(const ActuatorGeometry& geom) {
  return rad_to_deg(std::acos(std::clamp(geom.unit_width_mm / geom.unit_pitch_mm, -1.0, 1.0)));
}

double theta2_max(const ActuatorGeometry& geom) {
  return rad_to_deg(std::acos(std::clamp(geom.base_width_mm / geom.unit_pitch_mm, -1.0, 1.0)));
}

double mode2_limit(const ActuatorGeometry& geom) {
  return std::min(theta1_max(geom), theta2_max(geom));
}

double gap(const ActuatorGeometry& geom, double theta1_deg) {
  const double limit = theta1_max(geom);
  if (!(std::abs(theta1_deg) <= limit + kAngleSlackDeg)) {
    std::ostringstream os;
    os << "theta1 = " << theta1_deg << " deg outside admissible interval [" << -limit
       << ", " << limit << "] deg";
    throw DomainError(os.str());
  }
  const double g = geom.unit_pitch_mm * sincos_deg(theta1_deg).second - geom.unit_width_mm;
  return std::max(0.0, g);
}

}  // namespace rtspa
