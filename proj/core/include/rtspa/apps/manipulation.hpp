#pragma once

#include <string_view>

#include "rtspa/apps/gripper.hpp"

namespace rtspa::apps {

enum class ManipulationKind { Translate, RotateParallel, RotateTwist };

std::string_view to_string(ManipulationKind kind);
/// "translate", "rotate-parallel", "rotate-twist". Throws DomainError.
ManipulationKind parse_manipulation_kind(std::string_view text);

struct ManipulationParams {
  double shift_deg = 20.0;         ///< Mixed-mode base-line swing while holding
  double twist_theta1_deg = 30.0;  ///< Mode 1 unit rotation for twisting
};

/// Sequence templates for object translation with two fingers, rotation by
/// parallel finger motion, and rotation by twisting. Carriage motion is
/// emitted as annotations.
CommandSequence manipulation_plan(ManipulationKind kind, const GripperLayout& layout,
                                  const ManipulationParams& params = {});

}  // namespace rtspa::apps
