#include "rtspa/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rtspa/errors.hpp"

namespace rtspa {
namespace {

// Strict field reader for one JSON object.
class Reader {
 public:
  Reader(const json& j, std::string what) : j_(j), what_(std::move(what)) {
    if (!j_.is_object()) throw ConfigError(what_ + ": expected a JSON object");
  }

  double number(const std::string& key) {
    const json& v = require(key);
    if (!v.is_number()) throw ConfigError(what_ + ": '" + key + "' must be a number");
    return v.get<double>();
  }
  void number(const std::string& key, double& out) {
    if (j_.contains(key)) out = number(key);
  }
  int integer(const std::string& key) {
    const json& v = require(key);
    if (!v.is_number_integer()) throw ConfigError(what_ + ": '" + key + "' must be an integer");
    return v.get<int>();
  }
  void integer(const std::string& key, int& out) {
    if (j_.contains(key)) out = integer(key);
  }
  const json* optional(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key) ? &j_.at(key) : nullptr;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.contains(it.key())) throw ConfigError(what_ + ": unknown key '" + it.key() + "'");
    }
  }

 private:
  const json& require(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw ConfigError(what_ + ": missing key '" + key + "'");
    return j_.at(key);
  }

  const json& j_;
  std::string what_;
  std::set<std::string> seen_;
};

json parse_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("cannot parse '" + path + "': " + e.what());
  }
}

json vec3(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

json quat(const Eigen::Quaterniond& q) { return json::array({q.w(), q.x(), q.y(), q.z()}); }

}  // namespace

ActuatorGeometry geometry_from_json(const json& j) {
  Reader r(j, "geometry");
  ActuatorGeometry g;
  g.unit_width_mm = r.number("W");
  g.unit_pitch_mm = r.number("L");
  g.base_spacing_mm = r.number("G");
  g.base_width_mm = r.number("B");
  g.n_units = r.integer("n_units");
  g.unit_height_mm = r.number("unit_height");
  g.face_side_mm = r.number("face_side");
  g.wall_thickness_mm = r.number("wall_thickness");
  g.p_max_mpa = r.number("p_max");
  r.finish();
  return g;
}

json to_json(const ActuatorGeometry& g) {
  json j;
  j["W"] = g.unit_width_mm;
  j["L"] = g.unit_pitch_mm;
  j["G"] = g.base_spacing_mm;
  j["B"] = g.base_width_mm;
  j["n_units"] = g.n_units;
  j["unit_height"] = g.unit_height_mm;
  j["face_side"] = g.face_side_mm;
  j["wall_thickness"] = g.wall_thickness_mm;
  j["p_max"] = g.p_max_mpa;
  return j;
}

ActuatorGeometry load_geometry(const std::string& path) {
  return geometry_from_json(parse_file(path));
}

MaterialConfig material_config_from_json(const json& j) {
  Reader r(j, "material");
  MaterialConfig m;
  m.ogden.mu_mpa = r.number("mu_mpa");
  m.ogden.alpha = r.number("alpha");
  r.number("membrane_constant", m.membrane_constant);
  r.number("strain_cap", m.strain_cap);
  r.finish();
  if (!m.ogden.valid()) throw ConfigError("material: need mu > 0 and mu * alpha > 0");
  if (!(m.membrane_constant > 0.0)) throw ConfigError("material: membrane_constant must be positive");
  if (!(m.strain_cap > 0.0)) throw ConfigError("material: strain_cap must be positive");
  return m;
}

json to_json(const MaterialConfig& m) {
  return {{"mu_mpa", m.ogden.mu_mpa},
          {"alpha", m.ogden.alpha},
          {"membrane_constant", m.membrane_constant},
          {"strain_cap", m.strain_cap}};
}

MaterialConfig load_material_config(const std::string& path) {
  return material_config_from_json(parse_file(path));
}

apps::GripperLayout gripper_layout_from_json(const json& j) {
  Reader r(j, "gripper layout");
  apps::GripperLayout l;
  r.integer("finger_count", l.finger_count);
  r.number("base_circle_diameter_mm", l.base_circle_diameter_mm);
  if (const json* f = r.optional("finger")) l.finger = geometry_from_json(*f);
  if (const json* a = r.optional("mount_angles_deg")) {
    if (!a->is_array()) throw ConfigError("gripper layout: 'mount_angles_deg' must be an array");
    l.mount_angles_deg.clear();
    for (const auto& v : *a) {
      if (!v.is_number()) throw ConfigError("gripper layout: mount angles must be numbers");
      l.mount_angles_deg.push_back(v.get<double>());
    }
  }
  r.number("tip_extension_mm", l.tip_extension_mm);
  r.number("two_finger_fraction", l.two_finger_fraction);
  r.number("grip_pressure_mpa", l.grip_pressure_mpa);
  r.number("clearance_mm", l.clearance_mm);
  r.finish();
  apps::validate_layout(l);
  return l;
}

json to_json(const apps::GripperLayout& l) {
  return {{"finger_count", l.finger_count},
          {"base_circle_diameter_mm", l.base_circle_diameter_mm},
          {"finger", to_json(l.finger)},
          {"mount_angles_deg", l.mount_angles_deg},
          {"tip_extension_mm", l.tip_extension_mm},
          {"two_finger_fraction", l.two_finger_fraction},
          {"grip_pressure_mpa", l.grip_pressure_mpa},
          {"clearance_mm", l.clearance_mm}};
}

apps::GripperLayout load_gripper_layout(const std::string& path) {
  return gripper_layout_from_json(parse_file(path));
}

json steps_to_json(const apps::CommandSequence& seq) {
  json steps = json::array();
  for (const auto& s : seq.steps) {
    steps.push_back({{"t_s", s.t_s},
                     {"actuator", s.actuator},
                     {"theta1_deg", s.configuration.transform.theta1_deg},
                     {"theta2_deg", s.configuration.transform.theta2_deg},
                     {"pressure_mpa", s.configuration.pressure_mpa}});
  }
  return steps;
}

json to_json(const apps::CommandSequence& seq) {
  json notes = json::array();
  for (const auto& a : seq.annotations) notes.push_back({{"t_s", a.t_s}, {"text", a.text}});
  return {{"label", seq.label},
          {"cyclic", seq.cyclic()},
          {"cycle_start_s", seq.cycle_start_s},
          {"period_s", seq.period_s},
          {"steps", steps_to_json(seq)},
          {"annotations", notes}};
}

json to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"ok", report.ok()}, {"checks", checks}};
}

json to_json(const Configuration& cfg) {
  return {{"theta1_deg", cfg.transform.theta1_deg},
          {"theta2_deg", cfg.transform.theta2_deg},
          {"mode", std::string(to_string(cfg.transform.mode))},
          {"pressure_mpa", cfg.pressure_mpa}};
}

json to_json(const PoseChain& chain) {
  json frames = json::array();
  for (const auto& f : chain.frames) {
    frames.push_back({{"position_mm", vec3(f.position)}, {"orientation_wxyz", quat(f.orientation)}});
  }
  json markers = json::array();
  for (const auto& m : chain.markers) markers.push_back(vec3(m));
  return {{"frames", frames},
          {"markers_mm", markers},
          {"tip", {{"position_mm", vec3(chain.tip.position)},
                   {"orientation_wxyz", quat(chain.tip.orientation)}}},
          {"twist_deg", twist_about_tangent(chain)},
          {"bending_deg", bending_angle(chain)},
          {"arc_length_mm", arc_length(chain)}};
}

json to_json(const SolveResult& r) {
  return {{"configuration", to_json(r.configuration)},
          {"achieved_mm", vec3(r.achieved)},
          {"residual_mm", r.residual_mm},
          {"twist_deg", r.twist_deg},
          {"evals", r.evals},
          {"status", r.status == SolveStatus::Converged ? "converged" : "best_effort"},
          {"start_index", r.start_index}};
}

json to_json(const WorkspaceMetrics& m) {
  return {{"sample_count", m.sample_count},
          {"bbox_min_mm", vec3(m.bbox_min)},
          {"bbox_max_mm", vec3(m.bbox_max)},
          {"hull_volume_mm3", m.hull_volume_mm3},
          {"tip_excursion_mm", vec3(m.tip_excursion_mm)}};
}

json to_json(const OgdenFit& fit) {
  return {{"mu_mpa", fit.model.mu_mpa},
          {"alpha", fit.model.alpha},
          {"initial_modulus_mpa", fit.model.initial_modulus_mpa()},
          {"rmse_mpa", fit.rmse_mpa},
          {"evaluations", fit.evaluations},
          {"best_start", fit.best_start}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rtspa
