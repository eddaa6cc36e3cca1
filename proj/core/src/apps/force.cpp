#include "rtspa/apps/force.hpp"

#include <algorithm>

#include "rtspa/errors.hpp"

namespace rtspa::apps {

double contact_area_mm2(const ActuatorGeometry& geom, double theta1_deg) {
  gap(geom, theta1_deg);  // domain check only
  // The pillow face keeps its full area when the units tilt; tilting only
  // brings the faces closer.
  return geom.face_side_mm * geom.face_side_mm;
}

double blocking_force(const ActuatorGeometry& geom, const MaterialModel& mat, double theta1_deg,
                      double pressure_mpa, double gain) {
  if (!(pressure_mpa >= 0.0 && pressure_mpa <= geom.p_max_mpa + 1e-12)) {
    throw DomainError("pressure outside [0, p_max]");
  }
  const double g = gap(geom, theta1_deg);
  const double overlap = std::max(0.0, expansion(mat, pressure_mpa) - g);
  return gain * pressure_mpa * contact_area_mm2(geom, theta1_deg) * overlap /
         geom.backbone_length_mm();
}

}  // namespace rtspa::apps
