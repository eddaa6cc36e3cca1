#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "rtspa/geometry.hpp"
#include "rtspa/material.hpp"
#include "rtspa/rrm.hpp"

namespace rtspa {

// Forward kinematics of the soft actuation chain.
//
// Coordinates: the root sits at the origin on the RRM housing, the
// unpressurised chain runs along +z, the base line (strain-limiting side)
// spans the x-z plane and pressurisation bends the chain toward +y. theta1 and
// theta2 are rotations about +y. Negating both angles mirrors the chain
// through the y-z plane.
//
// The backbone is a polyline through the unit centres. Between adjacent units
// sits a hinge at the contact plane; its rotation is the joint angle phi. Each
// frame's z axis follows the inter-unit backbone direction; the two end stubs
// (half a unit height each) follow the unit orientation instead, which is
// tilted by theta1 relative to the backbone.

struct JointLaw {
  double gain_deg_per_mm = 8.0;  ///< k_phi
  double cap_deg = 35.0;         ///< phi_cap
};

struct Configuration {
  TransformState transform;
  double pressure_mpa = 0.0;
};

Configuration make_configuration(double theta1_deg, double theta2_deg,
                                 double pressure_mpa);

/// Throws DomainError / ContactViolation when the configuration is outside
/// the admissible set of `geom`.
void validate_configuration(const Configuration& cfg, const ActuatorGeometry& geom);

/// Everything needed to evaluate the chain.
struct ActuatorModel {
  ActuatorGeometry geometry;
  MaterialModel material;
  JointLaw joint;
};

ActuatorModel make_model(const ActuatorGeometry& geom);
ActuatorModel make_model(const ActuatorGeometry& geom, const OgdenModel& ogden);

struct Frame {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();
};

inline constexpr int kMarkerCount = 10;

struct PoseChain {
  /// Root, one frame per inter-unit hinge, and the tip: n_units + 1 frames.
  std::vector<Frame> frames;
  /// Evenly spaced by arc length; the last one is the tip, the root is excluded.
  std::array<Eigen::Vector3d, kMarkerCount> markers;
  Frame tip;
  /// Polyline root, c1, h1, c2, ..., h(n-1), cn, tip.
  std::vector<Eigen::Vector3d> backbone;
  /// Orientation of the last unit (tip frame tilted by theta1).
  Eigen::Quaterniond tip_unit_orientation = Eigen::Quaterniond::Identity();
};

/// phi = k_phi * max(0, e(p) - g(theta1)), clipped to phi_cap. Degrees.
double joint_angle(double pressure_mpa, double theta1_deg,
                   const ActuatorGeometry& geom, const MaterialModel& mat,
                   const JointLaw& law = {});

PoseChain forward_kinematics(const ActuatorGeometry& geom, const MaterialModel& mat,
                             const Configuration& cfg, const JointLaw& law = {});
PoseChain forward_kinematics(const ActuatorModel& model, const Configuration& cfg);

/// Twist of the tip frame about the backbone tangent, relative to the root
/// frame (swing-twist decomposition about local z). Degrees in (-180, 180].
double tip_twist(const ActuatorGeometry& geom, const MaterialModel& mat,
                 const Configuration& cfg, const JointLaw& law = {});
double tip_twist(const ActuatorModel& model, const Configuration& cfg);
double twist_about_tangent(const PoseChain& chain);

/// Angle between root and tip tangents, degrees.
double bending_angle(const PoseChain& chain);

/// Sum of the backbone polyline segment lengths.
double arc_length(const PoseChain& chain);

}  // namespace rtspa
