#include "rtspa/apps/command_sequence.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "rtspa/errors.hpp"

namespace rtspa::apps {

void validate_sequence(const CommandSequence& seq, const ActuatorGeometry& geom) {
  double last = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& s = seq.steps[i];
    if (!(s.t_s >= last)) throw DomainError("step " + std::to_string(i) + ": time goes backwards");
    if (s.actuator < 0 || s.actuator >= kActuatorCount) {
      throw DomainError("step " + std::to_string(i) + ": actuator id out of range");
    }
    validate_configuration(s.configuration, geom);
    last = s.t_s;
  }
  if (seq.period_s < 0.0) throw DomainError("negative period");
}

std::vector<double> keyframe_times(const CommandSequence& seq) {
  std::vector<double> times;
  for (const auto& s : seq.steps) {
    if (times.empty() || times.back() != s.t_s) times.push_back(s.t_s);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

void push_keyframe(CommandSequence& seq, double t_s,
                   const std::array<Configuration, kActuatorCount>& configs) {
  for (int i = 0; i < kActuatorCount; ++i) seq.steps.push_back({t_s, i, configs[i]});
}

}  // namespace rtspa::apps
