#include "rtspa/apps/gait.hpp"

#include <cmath>
#include <map>
#include <string>

#include "rtspa/angles.hpp"
#include "rtspa/errors.hpp"

namespace rtspa::apps {
namespace {

using Pose = std::array<Configuration, kActuatorCount>;

// Unit rotation sign that turns the body clockwise (seen from above).
constexpr double kClockwiseTheta1Sign = 1.0;
// Lean sign of leg 0 that walks the body toward +y; leg 2 takes the other.
constexpr double kPlusYLeanSign = -1.0;

Pose uniform(const Configuration& cfg) {
  Pose pose;
  pose.fill(cfg);
  return pose;
}

// Foot in the body frame. Leg-local z runs radially outward, x along the
// clockwise tangent; local y (down) is dropped.
Eigen::Vector2d foot(const ActuatorModel& model, int leg, const Configuration& cfg,
                     double body_radius) {
  const auto [s, c] = sincos_deg(90.0 * leg);
  const Eigen::Vector2d radial(c, s);
  const Eigen::Vector2d tangent(-s, c);
  const Eigen::Vector3d tip = forward_kinematics(model, cfg).tip.position;
  return (body_radius + tip.z()) * radial - tip.x() * tangent;
}

// Rigid planar map (rotation angle, translation) taking `from` onto `to`
// in the least-squares sense.
std::pair<double, Eigen::Vector2d> fit_rigid(const std::vector<Eigen::Vector2d>& from,
                                             const std::vector<Eigen::Vector2d>& to) {
  Eigen::Vector2d cf = Eigen::Vector2d::Zero(), ct = Eigen::Vector2d::Zero();
  for (std::size_t i = 0; i < from.size(); ++i) cf += from[i], ct += to[i];
  cf /= static_cast<double>(from.size());
  ct /= static_cast<double>(to.size());
  double angle = 0.0;
  if (from.size() > 1) {
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      const Eigen::Vector2d a = from[i] - cf, b = to[i] - ct;
      sxx += a.dot(b);
      sxy += a.x() * b.y() - a.y() * b.x();
    }
    angle = std::atan2(sxy, sxx);
  }
  const Eigen::Rotation2Dd rot(angle);
  return {angle, ct - rot * cf};
}

}  // namespace

std::string_view to_string(GaitDirection d) {
  switch (d) {
    case GaitDirection::PlusX: return "+x";
    case GaitDirection::MinusX: return "-x";
    case GaitDirection::PlusY: return "+y";
    case GaitDirection::MinusY: return "-y";
    case GaitDirection::Clockwise: return "cw";
    case GaitDirection::CounterClockwise: return "ccw";
  }
  return "?";
}

GaitDirection parse_gait_direction(std::string_view text) {
  for (auto d : {GaitDirection::PlusX, GaitDirection::MinusX, GaitDirection::PlusY,
                 GaitDirection::MinusY, GaitDirection::Clockwise,
                 GaitDirection::CounterClockwise}) {
    if (text == to_string(d)) return d;
  }
  throw DomainError("unknown gait direction '" + std::string(text) + "' (+x, -x, +y, -y, cw, ccw)");
}

CommandSequence gait_plan(GaitDirection direction, const ActuatorGeometry& geom,
                          const GaitParams& params) {
  if (!(params.period_s > 0.0) || params.reorient_s < 0.0) {
    throw DomainError("gait timing must be positive");
  }
  const double p = params.pressure_mpa;
  CommandSequence seq;
  seq.label = "gait " + std::string(to_string(direction));
  seq.period_s = params.period_s;

  Pose idle = uniform(make_configuration(0.0, 0.0, 0.0));
  std::array<bool, kActuatorCount> drive{};
  bool prelude = false;

  switch (direction) {
    case GaitDirection::PlusX:
    case GaitDirection::MinusX:
      drive[direction == GaitDirection::PlusX ? 0 : 2] = true;
      break;
    case GaitDirection::PlusY:
    case GaitDirection::MinusY: {
      const double s = (direction == GaitDirection::PlusY ? 1.0 : -1.0) * kPlusYLeanSign;
      const double lean = params.lean_deg;
      idle[0] = make_configuration(0.0, s * lean, 0.0);
      idle[2] = make_configuration(0.0, -s * lean, 0.0);
      idle[1] = make_configuration(0.0, lean, 0.0);
      idle[3] = make_configuration(0.0, -lean, 0.0);
      drive[0] = drive[2] = true;
      prelude = true;
      break;
    }
    case GaitDirection::Clockwise:
    case GaitDirection::CounterClockwise: {
      const double t1 = params.turn_theta1_deg < 0.0 ? theta1_max(geom) : params.turn_theta1_deg;
      const double s = (direction == GaitDirection::Clockwise ? 1.0 : -1.0) * kClockwiseTheta1Sign;
      idle[0] = idle[2] = make_configuration(s * t1, 0.0, 0.0);
      idle[1] = make_configuration(0.0, params.lean_deg, 0.0);
      idle[3] = make_configuration(0.0, -params.lean_deg, 0.0);
      drive[0] = drive[2] = true;
      prelude = true;
      break;
    }
  }

  Pose active = idle;
  for (int i = 0; i < kActuatorCount; ++i) {
    if (drive[i]) active[i].pressure_mpa = p;
  }
  push_keyframe(seq, 0.0, idle);
  seq.cycle_start_s = prelude ? params.reorient_s : 0.0;
  if (prelude && params.reorient_s > 0.0) push_keyframe(seq, seq.cycle_start_s, idle);
  push_keyframe(seq, seq.cycle_start_s + 0.5 * params.period_s, active);
  push_keyframe(seq, seq.cycle_start_s + params.period_s, idle);
  validate_sequence(seq, geom);
  return seq;
}

std::vector<PlanarPose> simulate_gait(const ActuatorModel& model, const CommandSequence& seq,
                                      int cycles, const GaitParams& params) {
  if (cycles < 0) throw DomainError("cycle count must be non-negative");
  validate_sequence(seq, model.geometry);

  // Keyframes: time -> per-actuator overrides.
  std::map<double, std::map<int, Configuration>> frames;
  for (const auto& s : seq.steps) frames[s.t_s][s.actuator] = s.configuration;

  Pose state = uniform(make_configuration(0.0, 0.0, 0.0));
  PlanarPose body;
  std::vector<PlanarPose> out;

  auto apply = [&](const std::map<int, Configuration>& updates) {
    std::vector<Eigen::Vector2d> from, to;
    for (const auto& [leg, cfg] : updates) {
      if (cfg.pressure_mpa > state[leg].pressure_mpa) {
        from.push_back(foot(model, leg, cfg, params.body_radius_mm));
        to.push_back(foot(model, leg, state[leg], params.body_radius_mm));
      }
    }
    for (const auto& [leg, cfg] : updates) state[leg] = cfg;
    if (from.empty()) return;
    const auto [angle, shift] = fit_rigid(from, to);
    const Eigen::Vector2d world = Eigen::Rotation2Dd(deg_to_rad(body.yaw_deg)) * shift;
    body.x_mm += world.x();
    body.y_mm += world.y();
    body.yaw_deg += rad_to_deg(angle);
  };

  const bool cyclic = seq.cyclic();
  for (const auto& [t, updates] : frames) {
    if (cyclic && t > seq.cycle_start_s) break;
    apply(updates);
  }
  body.t_s = cyclic ? seq.cycle_start_s : (frames.empty() ? 0.0 : frames.rbegin()->first);
  out.push_back(body);
  if (!cyclic) return out;

  for (int c = 0; c < cycles; ++c) {
    for (const auto& [t, updates] : frames) {
      if (t <= seq.cycle_start_s) continue;
      apply(updates);
      body.t_s = t + c * seq.period_s;
      out.push_back(body);
    }
  }
  return out;
}

}  // namespace rtspa::apps
