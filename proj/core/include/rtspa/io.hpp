#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "rtspa/apps/command_sequence.hpp"
#include "rtspa/apps/gripper.hpp"
#include "rtspa/geometry.hpp"
#include "rtspa/inverse_solver.hpp"
#include "rtspa/material.hpp"
#include "rtspa/sam_kinematics.hpp"
#include "rtspa/workspace.hpp"

// JSON config files and machine-readable outputs. Parsers are strict: unknown
// keys, missing keys and wrong types raise ConfigError.

namespace rtspa {

using nlohmann::json;

ActuatorGeometry geometry_from_json(const json& j);
json to_json(const ActuatorGeometry& geom);
ActuatorGeometry load_geometry(const std::string& path);

/// Material file: {"mu_mpa", "alpha", "membrane_constant", "strain_cap"}.
struct MaterialConfig {
  OgdenModel ogden = kSyntheticFilament;
  double membrane_constant = kMembraneConstant;
  double strain_cap = kDefaultStrainCap;
};
MaterialConfig material_config_from_json(const json& j);
json to_json(const MaterialConfig& cfg);
MaterialConfig load_material_config(const std::string& path);

apps::GripperLayout gripper_layout_from_json(const json& j);
json to_json(const apps::GripperLayout& layout);
apps::GripperLayout load_gripper_layout(const std::string& path);

/// Plan export: list of {t_s, actuator, theta1_deg, theta2_deg, pressure_mpa}.
json steps_to_json(const apps::CommandSequence& seq);
/// Full plan document: label, cycle timing, steps, annotations.
json to_json(const apps::CommandSequence& seq);

json to_json(const ValidationReport& report);
json to_json(const Configuration& cfg);
json to_json(const PoseChain& chain);
json to_json(const SolveResult& result);
json to_json(const WorkspaceMetrics& metrics);
json to_json(const OgdenFit& fit);

/// Reads a whole file; ConfigError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace rtspa
