#include "rtspa/apps/manipulation.hpp"

#include <string>

#include "rtspa/errors.hpp"

namespace rtspa::apps {

std::string_view to_string(ManipulationKind kind) {
  switch (kind) {
    case ManipulationKind::Translate: return "translate";
    case ManipulationKind::RotateParallel: return "rotate-parallel";
    case ManipulationKind::RotateTwist: return "rotate-twist";
  }
  return "?";
}

ManipulationKind parse_manipulation_kind(std::string_view text) {
  for (auto k : {ManipulationKind::Translate, ManipulationKind::RotateParallel,
                 ManipulationKind::RotateTwist}) {
    if (text == to_string(k)) return k;
  }
  throw DomainError("unknown manipulation '" + std::string(text) +
                    "' (translate, rotate-parallel, rotate-twist)");
}

CommandSequence manipulation_plan(ManipulationKind kind, const GripperLayout& layout,
                                  const ManipulationParams& params) {
  validate_layout(layout);
  const double p = layout.grip_pressure_mpa;
  const auto cfg = [](double t1, double t2, double pressure) {
    return make_configuration(t1, t2, pressure);
  };
  using Frame = std::array<Configuration, kActuatorCount>;

  CommandSequence seq;
  seq.label = "manipulate " + std::string(to_string(kind));
  const Frame rest{cfg(0, 0, 0), cfg(0, 0, 0), cfg(0, 0, 0), cfg(0, 0, 0)};
  push_keyframe(seq, 0.0, rest);

  switch (kind) {
    case ManipulationKind::Translate: {
      // Fingers 1 and 3 swing out of the way; 0 and 2 hold and shear the
      // object along the same world direction.
      const double away = theta2_max(layout.finger);
      const double s = params.shift_deg;
      push_keyframe(seq, 1.0, {cfg(0, 0, 0), cfg(0, away, 0), cfg(0, 0, 0), cfg(0, away, 0)});
      push_keyframe(seq, 2.0, {cfg(0, 0, p), cfg(0, away, 0), cfg(0, 0, p), cfg(0, away, 0)});
      push_keyframe(seq, 3.0, {cfg(0, -s, p), cfg(0, away, 0), cfg(0, s, p), cfg(0, away, 0)});
      push_keyframe(seq, 4.0, {cfg(0, -s, 0), cfg(0, away, 0), cfg(0, s, 0), cfg(0, away, 0)});
      push_keyframe(seq, 5.0, rest);
      break;
    }
    case ManipulationKind::RotateParallel: {
      const double s = params.shift_deg;
      push_keyframe(seq, 1.0, {cfg(0, 0, p), cfg(0, 0, p), cfg(0, 0, p), cfg(0, 0, p)});
      push_keyframe(seq, 2.0, {cfg(0, s, p), cfg(0, s, p), cfg(0, s, p), cfg(0, s, p)});
      push_keyframe(seq, 3.0, {cfg(0, s, 0), cfg(0, s, 0), cfg(0, s, 0), cfg(0, s, 0)});
      push_keyframe(seq, 4.0, rest);
      break;
    }
    case ManipulationKind::RotateTwist: {
      const double t = params.twist_theta1_deg;
      const Frame set{cfg(t, 0, 0), cfg(t, 0, 0), cfg(t, 0, 0), cfg(t, 0, 0)};
      const Frame hold{cfg(t, 0, p), cfg(t, 0, p), cfg(t, 0, p), cfg(t, 0, p)};
      push_keyframe(seq, 1.0, set);
      seq.annotations.push_back({1.0, "carriage down to the object"});
      push_keyframe(seq, 2.0, hold);
      seq.annotations.push_back({2.0, "carriage up while the fingers twist"});
      seq.annotations.push_back({3.0, "carriage down to release height"});
      push_keyframe(seq, 3.0, set);
      push_keyframe(seq, 4.0, rest);
      seq.annotations.push_back({4.0, "carriage up"});
      break;
    }
  }
  validate_sequence(seq, layout.finger);
  return seq;
}

}  // namespace rtspa::apps
