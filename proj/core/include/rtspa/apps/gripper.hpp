#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "rtspa/apps/command_sequence.hpp"

namespace rtspa::apps {

// Four-fingered concentric gripper. Finger i hangs from the palm at
// mount_angles_deg[i] on a circle of diameter base_circle_diameter_mm;
// bending closes the finger toward the axis, and the base-line shear swings
// the fingertip along the clockwise tangent. A rigid tip connector of length
// tip_extension_mm continues the last unit.

/// Reported enhanced opening of the reference gripper.
inline constexpr double kReferenceEnhancedOpeningMm = 263.0;

struct GripperLayout {
  int finger_count = 4;
  double base_circle_diameter_mm = 120.0;
  ActuatorGeometry finger;
  std::vector<double> mount_angles_deg{0.0, 90.0, 180.0, 270.0};
  /// Calibrated so a full Mixed-mode lean opens the default gripper to the
  /// reference opening (see tools/calibrate_gripper).
  double tip_extension_mm = 106.2674;
  /// Compact objects below this fraction of the base opening use two fingers.
  double two_finger_fraction = 0.45;
  double grip_pressure_mpa = 0.5;
  /// Extra opening kept around an object before closing.
  double clearance_mm = 5.0;
};

/// Throws ConfigError on an inconsistent layout.
void validate_layout(const GripperLayout& layout);

/// Fingertip position in the palm plane at zero pressure.
Eigen::Vector2d fingertip(const GripperLayout& layout, int finger,
                          const TransformState& transform);

/// Diameter of the largest circle inscribed between opposing fingertips at
/// zero pressure: the smallest distance over the opposing pairs.
double gripper_opening(const GripperLayout& layout,
                       std::span<const TransformState> transforms);

/// Mixed-mode lean: base line rotated by `lean_deg`, motor A compensating so
/// the units stay square to it (theta1 = 0).
TransformState lean_transform(double lean_deg);

/// Opening with every finger at the full lean theta2_max.
double max_enhanced_opening(const GripperLayout& layout);

/// Tip extension that makes max_enhanced_opening equal `target_opening_mm`.
double calibrate_tip_extension(GripperLayout layout, double target_opening_mm);

enum class ObjectShape { Compact, Flat, Oversized, Delicate };
enum class GripMode { Cage, TwoFinger, EnhancedOpening, PseudoParallel };

std::string_view to_string(ObjectShape shape);
std::string_view to_string(GripMode mode);
ObjectShape parse_object_shape(std::string_view text);

struct ObjectDescriptor {
  double size_mm = 0.0;
  ObjectShape shape = ObjectShape::Compact;
};

struct GripPlan {
  GripMode mode = GripMode::Cage;
  CommandSequence sequence;
  /// Opening at the moment the fingers close.
  double opening_mm = 0.0;
  double lean_deg = 0.0;
};

/// Throws InfeasibleError when the object exceeds the enhanced opening.
GripPlan plan_grip(const GripperLayout& layout, const ObjectDescriptor& object);

}  // namespace rtspa::apps
