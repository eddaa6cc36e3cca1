#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rtspa/sam_kinematics.hpp"

namespace rtspa {

enum class SweepMode { Bending, Mode1, Mode2 };

std::string_view to_string(SweepMode mode);
/// Accepts "bending", "mode1", "mode2" (case-insensitive). Throws DomainError.
SweepMode parse_sweep_mode(std::string_view text);

struct SweepSpec {
  SweepMode mode = SweepMode::Mode1;
  double angle_step_deg = 5.0;
  int pressure_steps = 50;
  /// Marker indices to keep; empty keeps all ten.
  std::vector<int> markers;
};

struct WorkspaceSample {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  int marker = 0;
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  double pressure_mpa = 0.0;
  bool mirrored = false;

  friend bool operator==(const WorkspaceSample&, const WorkspaceSample&) = default;
};

/// 0, step, 2 step, ... up to `limit`, with `limit` itself appended when the
/// grid does not land on it.
std::vector<double> angle_levels(double limit_deg, double step_deg);

/// Grid sweep, ordered angle-major, pressure-minor, marker-minor.
std::vector<WorkspaceSample> sweep(const ActuatorModel& model, const SweepSpec& spec);

/// Input followed by copies with x negated and `mirrored` set.
std::vector<WorkspaceSample> mirror_yz(std::span<const WorkspaceSample> samples);

struct WorkspaceMetrics {
  std::size_t sample_count = 0;
  Eigen::Vector3d bbox_min = Eigen::Vector3d::Zero();
  Eigen::Vector3d bbox_max = Eigen::Vector3d::Zero();
  double hull_volume_mm3 = 0.0;
  /// Per-axis range (max - min) of the tip-marker samples.
  Eigen::Vector3d tip_excursion_mm = Eigen::Vector3d::Zero();
};

WorkspaceMetrics workspace_metrics(std::span<const WorkspaceSample> samples);

inline constexpr std::string_view kWorkspaceCsvHeader =
    "x_mm,y_mm,z_mm,marker,theta1_deg,theta2_deg,pressure_mpa,mirrored";

/// Doubles are written in shortest round-trip form, so read_workspace_csv
/// reproduces the samples bit for bit.
void write_workspace_csv(std::ostream& out, std::span<const WorkspaceSample> samples);
std::vector<WorkspaceSample> read_workspace_csv(std::istream& in);

/// ASCII PLY, vertices only.
void write_workspace_ply(std::ostream& out, std::span<const WorkspaceSample> samples);

}  // namespace rtspa
