#pragma once

#include <optional>

#include <Eigen/Core>

#include "rtspa/sam_kinematics.hpp"

namespace rtspa {

/// Weight of the twist term relative to the position residual.
inline constexpr double kTwistWeightMmPerDeg = 0.1;

struct SolveRequest {
  Eigen::Vector3d target = Eigen::Vector3d::Zero();
  std::optional<double> twist_target_deg;
  double tolerance_mm = 0.5;
  int max_evals = 5000;
};

enum class SolveStatus { Converged, BestEffort };

struct SolveResult {
  Configuration configuration;
  Eigen::Vector3d achieved = Eigen::Vector3d::Zero();
  double residual_mm = 0.0;
  double twist_deg = 0.0;
  int evals = 0;
  SolveStatus status = SolveStatus::BestEffort;
  int start_index = -1;
};

/// Finds (theta1, theta2, p) inside the admissible box whose tip reaches the
/// target. Bounded simplex search from a fixed 3x3x3 lattice of starts.
///
/// Throws DomainError for an invalid request and UnreachableTarget when the
/// target lies farther from the root than the backbone is long.
SolveResult solve(const ActuatorModel& model, const SolveRequest& request);

struct Reachability {
  bool reachable = false;
  double residual_mm = 0.0;
};

Reachability reachability(const ActuatorModel& model, const Eigen::Vector3d& target);

}  // namespace rtspa
