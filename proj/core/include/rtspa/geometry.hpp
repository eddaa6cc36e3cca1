#pragma once

#include <string>
#include <vector>

namespace rtspa {

/// Lengths and counts that define one transformable actuator.
///
/// All lengths are in millimetres, pressure in MPa. The JSON keys used by
/// the config files are given next to each field.
struct ActuatorGeometry {
  double unit_width_mm = 7.1;      ///< "W": actuation unit width.
  double unit_pitch_mm = 10.0;     ///< "L": centre distance of adjacent units.
  double base_spacing_mm = 4.0;    ///< "G": distance between adjacent bases.
  double base_width_mm = 6.0;      ///< "B": SAM base width, sets the theta2 limit.
  int n_units = 4;                 ///< "n_units"
  double unit_height_mm = 10.0;    ///< "unit_height": axial extent of one unit.
  double face_side_mm = 20.0;      ///< "face_side": pillow front/back face side.
  double wall_thickness_mm = 1.0;  ///< "wall_thickness": pillow face wall.
  double p_max_mpa = 0.5;          ///< "p_max": rated pressure.

  /// Arc length of the backbone from the root to the tip. Pressure does not
  /// change it (inextensible backbone).
  double backbone_length_mm() const {
    return (n_units - 1) * unit_pitch_mm + unit_height_mm;
  }

  friend bool operator==(const ActuatorGeometry&, const ActuatorGeometry&) = default;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  std::vector<std::string> failures() const;
};

ValidationReport validate(const ActuatorGeometry& geom);

/// Throws ConfigError listing every failed check.
void require_valid(const ActuatorGeometry& geom);

/// Clearance between adjacent unit faces, g = L cos(theta1) - W.
/// Throws DomainError when |theta1| exceeds theta1_max.
double gap(const ActuatorGeometry& geom, double theta1_deg);

/// arccos(W / L) in degrees: the unit rotation at which faces touch.
double theta1_max(const ActuatorGeometry& geom);

/// arccos(B / L) in degrees: the base rotation at which bases touch.
double theta2_max(const ActuatorGeometry& geom);

/// Largest theta2 reachable in pure Mode 2. The passive unit rotation
/// theta1 = -theta2 must respect the unit contact limit as well.
double mode2_limit(const ActuatorGeometry& geom);

}  // namespace rtspa
