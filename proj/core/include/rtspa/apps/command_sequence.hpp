#pragma once

#include <string>
#include <vector>

#include "rtspa/sam_kinematics.hpp"

namespace rtspa::apps {

/// Robots and grippers in the applications carry four actuators.
inline constexpr int kActuatorCount = 4;

struct CommandStep {
  double t_s = 0.0;
  int actuator = 0;
  Configuration configuration;
};

/// Free-text note attached to a time, e.g. carriage motion that has no
/// actuator command of its own.
struct Annotation {
  double t_s = 0.0;
  std::string text;
};

struct CommandSequence {
  std::string label;
  std::vector<CommandStep> steps;
  /// Steps with t > cycle_start_s form one period of a repeating cycle; the
  /// ones at or before it are a one-off prelude. period_s == 0: not cyclic.
  double cycle_start_s = 0.0;
  double period_s = 0.0;
  std::vector<Annotation> annotations;

  bool cyclic() const { return period_s > 0.0; }
};

/// Throws DomainError if times decrease or an actuator id is out of range,
/// and propagates configuration errors of any step.
void validate_sequence(const CommandSequence& seq, const ActuatorGeometry& geom);

/// Distinct step times in ascending order.
std::vector<double> keyframe_times(const CommandSequence& seq);

/// Appends one step per actuator at time t.
void push_keyframe(CommandSequence& seq, double t_s,
                   const std::array<Configuration, kActuatorCount>& configs);

}  // namespace rtspa::apps
