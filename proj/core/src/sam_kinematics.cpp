#include "rtspa/sam_kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rtspa/angles.hpp"
#include "rtspa/errors.hpp"

namespace rtspa {
namespace {

constexpr double kPressureSlack = 1e-12;

void check_pressure(double p, const ActuatorGeometry& geom) {
  if (!(p >= -kPressureSlack && p <= geom.p_max_mpa + kPressureSlack)) {
    std::ostringstream os;
    os << "pressure " << p << " MPa outside [0, " << geom.p_max_mpa << "] MPa";
    throw DomainError(os.str());
  }
}

Eigen::Quaterniond about_y(double deg) {
  return Eigen::Quaterniond(Eigen::AngleAxisd(deg_to_rad(deg), Eigen::Vector3d::UnitY()));
}

}  // namespace

Configuration make_configuration(double theta1_deg, double theta2_deg, double pressure_mpa) {
  return {make_transform(theta1_deg, theta2_deg), pressure_mpa};
}

void validate_configuration(const Configuration& cfg, const ActuatorGeometry& geom) {
  check_pressure(cfg.pressure_mpa, geom);
  check_transform_limits(cfg.transform.theta1_deg, cfg.transform.theta2_deg, geom);
  // Both angles may be admissible on their own while motor A runs out of travel.
  transform_to_motors(cfg.transform, geom);
}

ActuatorModel make_model(const ActuatorGeometry& geom) {
  return {geom, default_material(geom), JointLaw{}};
}

ActuatorModel make_model(const ActuatorGeometry& geom, const OgdenModel& ogden) {
  return {geom, make_material(ogden, geom), JointLaw{}};
}

double joint_angle(double pressure_mpa, double theta1_deg, const ActuatorGeometry& geom,
                   const MaterialModel& mat, const JointLaw& law) {
  check_pressure(pressure_mpa, geom);
  const double g = gap(geom, theta1_deg);
  const double e = expansion(mat, std::clamp(pressure_mpa, 0.0, geom.p_max_mpa));
  if (e <= g) return 0.0;
  return std::min(law.cap_deg, law.gain_deg_per_mm * (e - g));
}

PoseChain forward_kinematics(const ActuatorGeometry& geom, const MaterialModel& mat,
                             const Configuration& cfg, const JointLaw& law) {
  validate_configuration(cfg, geom);
  const double t1 = cfg.transform.theta1_deg;
  const double t2 = cfg.transform.theta2_deg;
  const double phi = joint_angle(cfg.pressure_mpa, t1, geom, mat, law);
  const double half_h = 0.5 * geom.unit_height_mm;
  const double half_l = 0.5 * geom.unit_pitch_mm;
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();

  // Hinge axis in the backbone frame: the contact edge direction, tilted with the units.
  const auto [s1, c1] = sincos_deg(t1);
  const Eigen::Vector3d axis(-c1, 0.0, s1);
  const Eigen::Quaterniond hinge(Eigen::AngleAxisd(deg_to_rad(phi), axis));
  const Eigen::Quaterniond unit_tilt = about_y(t1);

  Eigen::Quaterniond backbone = about_y(t2);

  PoseChain chain;
  chain.frames.reserve(static_cast<std::size_t>(geom.n_units) + 1);
  chain.backbone.reserve(2 * static_cast<std::size_t>(geom.n_units) + 1);
  chain.frames.push_back({Eigen::Vector3d::Zero(), backbone});
  chain.backbone.push_back(Eigen::Vector3d::Zero());

  Eigen::Vector3d centre = (backbone * unit_tilt) * (half_h * z);
  chain.backbone.push_back(centre);
  for (int k = 1; k < geom.n_units; ++k) {
    const Eigen::Vector3d joint = centre + backbone * (half_l * z);
    backbone = (backbone * hinge).normalized();
    chain.frames.push_back({joint, backbone});
    chain.backbone.push_back(joint);
    centre = joint + backbone * (half_l * z);
    chain.backbone.push_back(centre);
  }
  chain.tip_unit_orientation = (backbone * unit_tilt).normalized();
  const Eigen::Vector3d tip = centre + chain.tip_unit_orientation * (half_h * z);
  chain.backbone.push_back(tip);
  chain.tip = {tip, backbone};
  chain.frames.push_back(chain.tip);

  // Markers by arc length along the polyline.
  const double total = arc_length(chain);
  std::size_t seg = 0;
  double seg_start = 0.0;
  for (int i = 0; i < kMarkerCount; ++i) {
    if (i == kMarkerCount - 1) {
      chain.markers[i] = tip;
      break;
    }
    const double s = total * (i + 1) / kMarkerCount;
    while (seg + 2 < chain.backbone.size()) {
      const double len = (chain.backbone[seg + 1] - chain.backbone[seg]).norm();
      if (seg_start + len >= s) break;
      seg_start += len;
      ++seg;
    }
    const Eigen::Vector3d& a = chain.backbone[seg];
    const Eigen::Vector3d& b = chain.backbone[seg + 1];
    const double len = (b - a).norm();
    const double u = len > 0.0 ? std::clamp((s - seg_start) / len, 0.0, 1.0) : 0.0;
    chain.markers[i] = a + u * (b - a);
  }
  return chain;
}

PoseChain forward_kinematics(const ActuatorModel& model, const Configuration& cfg) {
  return forward_kinematics(model.geometry, model.material, cfg, model.joint);
}

double twist_about_tangent(const PoseChain& chain) {
  Eigen::Quaterniond rel = chain.frames.front().orientation.conjugate() * chain.tip.orientation;
  if (rel.w() < 0.0) rel.coeffs() = -rel.coeffs();
  double twist = rad_to_deg(2.0 * std::atan2(rel.z(), rel.w()));
  if (twist <= -180.0) twist += 360.0;
  return twist;
}

double tip_twist(const ActuatorGeometry& geom, const MaterialModel& mat, const Configuration& cfg,
                 const JointLaw& law) {
  return twist_about_tangent(forward_kinematics(geom, mat, cfg, law));
}

double tip_twist(const ActuatorModel& model, const Configuration& cfg) {
  return twist_about_tangent(forward_kinematics(model, cfg));
}

double bending_angle(const PoseChain& chain) {
  const Eigen::Vector3d a = chain.frames.front().orientation * Eigen::Vector3d::UnitZ();
  const Eigen::Vector3d b = chain.tip.orientation * Eigen::Vector3d::UnitZ();
  return rad_to_deg(std::atan2(a.cross(b).norm(), a.dot(b)));
}

double arc_length(const PoseChain& chain) {
  double total = 0.0;
  for (std::size_t i = 1; i < chain.backbone.size(); ++i) {
    total += (chain.backbone[i] - chain.backbone[i - 1]).norm();
  }
  return total;
}

}  // namespace rtspa
