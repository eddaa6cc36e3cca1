#include "rtspa/apps/gripper.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "rtspa/angles.hpp"
#include "rtspa/errors.hpp"

namespace rtspa::apps {
namespace {

constexpr int kBisectionSteps = 200;

double max_lean(const GripperLayout& layout) { return theta2_max(layout.finger); }

double uniform_opening(const GripperLayout& layout, const TransformState& t) {
  const std::vector<TransformState> all(static_cast<std::size_t>(layout.finger_count), t);
  return gripper_opening(layout, all);
}

// Smallest lean whose opening reaches `required`.
double lean_for_opening(const GripperLayout& layout, double required) {
  double lo = 0.0, hi = max_lean(layout);
  if (uniform_opening(layout, lean_transform(lo)) >= required) return 0.0;
  for (int i = 0; i < kBisectionSteps && hi - lo > 1e-9; ++i) {
    const double mid = 0.5 * (lo + hi);
    (uniform_opening(layout, lean_transform(mid)) >= required ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

void validate_layout(const GripperLayout& layout) {
  std::ostringstream errors;
  if (layout.finger_count != kActuatorCount) errors << " finger_count must be 4;";
  if (!(layout.base_circle_diameter_mm > 0.0)) errors << " base_circle_diameter must be positive;";
  if (static_cast<int>(layout.mount_angles_deg.size()) != layout.finger_count) {
    errors << " need one mount angle per finger;";
  } else {
    std::set<double> distinct;
    for (double a : layout.mount_angles_deg) {
      double wrapped = std::fmod(a, 360.0);
      if (wrapped < 0.0) wrapped += 360.0;
      distinct.insert(wrapped);
    }
    if (distinct.size() != layout.mount_angles_deg.size()) errors << " mount angles must be distinct;";
  }
  if (!(layout.tip_extension_mm >= 0.0)) errors << " tip_extension must be non-negative;";
  if (!(layout.two_finger_fraction > 0.0 && layout.two_finger_fraction < 1.0)) {
    errors << " two_finger_fraction must lie in (0, 1);";
  }
  if (!(layout.grip_pressure_mpa > 0.0 && layout.grip_pressure_mpa <= layout.finger.p_max_mpa)) {
    errors << " grip_pressure must lie in (0, p_max];";
  }
  if (!(layout.clearance_mm >= 0.0)) errors << " clearance must be non-negative;";
  const auto report = validate(layout.finger);
  for (const auto& f : report.failures()) errors << ' ' << f << ';';
  if (!errors.str().empty()) throw ConfigError("invalid gripper layout:" + errors.str());
}

Eigen::Vector2d fingertip(const GripperLayout& layout, int finger, const TransformState& transform) {
  if (finger < 0 || finger >= static_cast<int>(layout.mount_angles_deg.size())) {
    throw DomainError("finger index out of range");
  }
  const auto model = make_model(layout.finger);
  const auto chain = forward_kinematics(model, Configuration{transform, 0.0});
  const Eigen::Vector3d tip =
      chain.tip.position +
      layout.tip_extension_mm * (chain.tip_unit_orientation * Eigen::Vector3d::UnitZ());
  const auto [s, c] = sincos_deg(layout.mount_angles_deg[finger]);
  const Eigen::Vector2d radial(c, s);
  const Eigen::Vector2d tangent(-s, c);
  // Finger-local y closes toward the axis, x runs along the clockwise tangent.
  return (0.5 * layout.base_circle_diameter_mm - tip.y()) * radial - tip.x() * tangent;
}

double gripper_opening(const GripperLayout& layout, std::span<const TransformState> transforms) {
  if (static_cast<int>(transforms.size()) != layout.finger_count) {
    throw DomainError("need one transform per finger");
  }
  const int half = layout.finger_count / 2;
  double opening = std::numeric_limits<double>::infinity();
  for (int i = 0; i < half; ++i) {
    const auto a = fingertip(layout, i, transforms[i]);
    const auto b = fingertip(layout, i + half, transforms[i + half]);
    opening = std::min(opening, (a - b).norm());
  }
  return opening;
}

TransformState lean_transform(double lean_deg) { return make_transform(0.0, lean_deg); }

double max_enhanced_opening(const GripperLayout& layout) {
  return uniform_opening(layout, lean_transform(max_lean(layout)));
}

double calibrate_tip_extension(GripperLayout layout, double target_opening_mm) {
  layout.tip_extension_mm = 0.0;
  if (max_enhanced_opening(layout) > target_opening_mm) {
    throw DomainError("target opening is below the opening without tip extension");
  }
  double lo = 0.0, hi = target_opening_mm;
  layout.tip_extension_mm = hi;
  if (max_enhanced_opening(layout) < target_opening_mm) {
    throw DomainError("target opening cannot be reached");
  }
  for (int i = 0; i < kBisectionSteps && hi - lo > 1e-12 * target_opening_mm; ++i) {
    layout.tip_extension_mm = 0.5 * (lo + hi);
    (max_enhanced_opening(layout) < target_opening_mm ? lo : hi) = layout.tip_extension_mm;
  }
  return 0.5 * (lo + hi);
}

std::string_view to_string(ObjectShape shape) {
  switch (shape) {
    case ObjectShape::Compact: return "compact";
    case ObjectShape::Flat: return "flat";
    case ObjectShape::Oversized: return "oversized";
    case ObjectShape::Delicate: return "delicate";
  }
  return "?";
}

std::string_view to_string(GripMode mode) {
  switch (mode) {
    case GripMode::Cage: return "cage";
    case GripMode::TwoFinger: return "two_finger";
    case GripMode::EnhancedOpening: return "enhanced_opening";
    case GripMode::PseudoParallel: return "pseudo_parallel";
  }
  return "?";
}

ObjectShape parse_object_shape(std::string_view text) {
  for (auto s : {ObjectShape::Compact, ObjectShape::Flat, ObjectShape::Oversized,
                 ObjectShape::Delicate}) {
    if (text == to_string(s)) return s;
  }
  throw DomainError("unknown object shape '" + std::string(text) +
                    "' (compact, flat, oversized, delicate)");
}

GripPlan plan_grip(const GripperLayout& layout, const ObjectDescriptor& object) {
  validate_layout(layout);
  if (!(object.size_mm > 0.0)) throw DomainError("object size must be positive");
  const double max_open = max_enhanced_opening(layout);
  if (object.size_mm > max_open) {
    std::ostringstream os;
    os << "object of " << object.size_mm << " mm exceeds the maximum enhanced opening of "
       << max_open << " mm";
    throw InfeasibleError(os.str());
  }

  const double base = layout.base_circle_diameter_mm;
  const double p = layout.grip_pressure_mpa;
  GripPlan plan;
  std::array<Configuration, kActuatorCount> open{}, closed{};

  if (object.shape == ObjectShape::Flat) {
    plan.mode = GripMode::PseudoParallel;
    const auto t = make_transform(theta1_max(layout.finger), 0.0);
    open.fill({t, 0.0});
    closed.fill({t, p});
  } else if (object.shape == ObjectShape::Oversized || object.shape == ObjectShape::Delicate ||
             object.size_mm >= base) {
    plan.mode = GripMode::EnhancedOpening;
    const double required = std::min(object.size_mm + layout.clearance_mm, max_open);
    plan.lean_deg = lean_for_opening(layout, required);
    const auto t = lean_transform(plan.lean_deg);
    open.fill({t, 0.0});
    closed.fill({t, p});
  } else if (object.size_mm < layout.two_finger_fraction * base) {
    plan.mode = GripMode::TwoFinger;
    open.fill({make_transform(0.0, 0.0), 0.0});
    closed = open;
    closed[0].pressure_mpa = closed[2].pressure_mpa = p;
  } else {
    plan.mode = GripMode::Cage;
    open.fill({make_transform(0.0, 0.0), 0.0});
    closed.fill({make_transform(0.0, 0.0), p});
  }

  std::vector<TransformState> transforms;
  for (const auto& c : open) transforms.push_back(c.transform);
  plan.opening_mm = gripper_opening(layout, transforms);

  plan.sequence.label = "grip " + std::string(to_string(plan.mode));
  push_keyframe(plan.sequence, 0.0, open);
  push_keyframe(plan.sequence, 1.0, closed);
  validate_sequence(plan.sequence, layout.finger);
  return plan;
}

}  // namespace rtspa::apps
