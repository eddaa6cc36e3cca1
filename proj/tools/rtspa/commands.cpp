#include "commands.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rtspa/apps/force.hpp"
#include "rtspa/apps/gait.hpp"
#include "rtspa/apps/gripper.hpp"
#include "rtspa/apps/manipulation.hpp"
#include "rtspa/errors.hpp"
#include "rtspa/io.hpp"

namespace rtspa::cli {
namespace {

namespace fs = std::filesystem;

struct ModelOptions {
  std::string config;
  std::string material;
};

void add_model_options(CLI::App* cmd, ModelOptions& o) {
  cmd->add_option("-c,--config", o.config, "Actuator geometry JSON (default: built-in geometry)")
      ->check(CLI::ExistingFile);
  cmd->add_option("-m,--material", o.material, "Material JSON (default: synthetic filament)")
      ->check(CLI::ExistingFile);
}

ActuatorGeometry load_geometry_or_default(const std::string& path) {
  ActuatorGeometry g = path.empty() ? ActuatorGeometry{} : load_geometry(path);
  require_valid(g);
  return g;
}

ActuatorModel load_model(const ModelOptions& o) {
  const ActuatorGeometry g = load_geometry_or_default(o.config);
  ActuatorModel model = make_model(g);
  if (!o.material.empty()) {
    const MaterialConfig mc = load_material_config(o.material);
    model.material = make_material(mc.ogden, g);
    model.material.membrane_constant = mc.membrane_constant;
  }
  return model;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_json_file(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

Eigen::Vector3d parse_target(const std::string& text) {
  Eigen::Vector3d v;
  std::string_view rest = text;
  for (int i = 0; i < 3; ++i) {
    const auto comma = rest.find(',');
    if ((i < 2) == (comma == std::string_view::npos)) {
      throw CLI::ValidationError("--target", "expected x,y,z in mm, got '" + text + "'");
    }
    std::string_view field = rest.substr(0, comma);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
      throw CLI::ValidationError("--target", "cannot parse '" + std::string(field) + "'");
    }
    v[i] = value;
    if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
  }
  return v;
}

}  // namespace

void register_validate(CLI::App& app, int& code) {
  auto* cmd = app.add_subcommand("validate", "Check a geometry config against its invariants");
  auto path = std::make_shared<std::string>();
  cmd->add_option("config", *path, "Geometry JSON")->required();
  cmd->callback([path, &code] {
    if (!fs::exists(*path)) throw ConfigError("no such file '" + *path + "'");
    const auto report = validate(load_geometry(*path));
    emit(to_json(report));
    for (const auto& f : report.failures()) std::cerr << "FAIL " << f << '\n';
    std::cerr << (report.ok() ? "geometry ok\n" : "geometry invalid\n");
    code = report.ok() ? kOk : kInfeasible;
  });
}

void register_workspace(CLI::App& app, int& code) {
  struct Opts {
    ModelOptions model;
    std::string mode = "mode1";
    double angle_step = 5.0;
    int pressure_steps = 50;
    bool mirror = false;
    bool ply = false;
    std::string out = "workspace_out";
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("workspace", "Sweep the workspace and write point clouds");
  add_model_options(cmd, o->model);
  cmd->add_option("--mode", o->mode, "bending, mode1 or mode2")
      ->check(CLI::IsMember({"bending", "mode1", "mode2"}, CLI::ignore_case));
  cmd->add_option("--angle-step", o->angle_step, "Angle grid step (deg)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--pressure-steps", o->pressure_steps, "Pressure levels over [0, p_max]")
      ->check(CLI::Range(2, 100000));
  cmd->add_flag("--mirror", o->mirror, "Append the y-z mirror image");
  cmd->add_flag("--ply", o->ply, "Also write workspace.ply");
  cmd->add_option("-o,--out", o->out, "Output directory");
  cmd->callback([o, &code] {
    const ActuatorModel model = load_model(o->model);
    SweepSpec spec;
    spec.mode = parse_sweep_mode(o->mode);
    spec.angle_step_deg = o->angle_step;
    spec.pressure_steps = o->pressure_steps;
    auto samples = sweep(model, spec);
    if (o->mirror) samples = mirror_yz(samples);
    const auto metrics = workspace_metrics(samples);

    const fs::path dir(o->out);
    fs::create_directories(dir);
    {
      std::ofstream csv(dir / "workspace.csv");
      if (!csv) throw ConfigError("cannot write into '" + dir.string() + "'");
      write_workspace_csv(csv, samples);
    }
    if (o->ply) {
      std::ofstream ply(dir / "workspace.ply");
      write_workspace_ply(ply, samples);
    }
    json doc = to_json(metrics);
    doc["mode"] = std::string(to_string(spec.mode));
    doc["mirrored"] = o->mirror;
    write_json_file(dir / "metrics.json", doc);
    emit(doc);
    std::cerr << samples.size() << " samples, hull volume " << metrics.hull_volume_mm3
              << " mm^3, written to " << dir.string() << '\n';
    code = kOk;
  });
}

void register_fk(CLI::App& app, int& code) {
  struct Opts {
    ModelOptions model;
    double theta1 = 0.0, theta2 = 0.0, pressure = 0.0;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("fk", "Forward kinematics of one configuration");
  add_model_options(cmd, o->model);
  cmd->add_option("--theta1", o->theta1, "Unit rotation (deg)");
  cmd->add_option("--theta2", o->theta2, "Base rotation (deg)");
  cmd->add_option("-p,--pressure", o->pressure, "Pressure (MPa)");
  cmd->callback([o, &code] {
    const ActuatorModel model = load_model(o->model);
    const auto cfg = make_configuration(o->theta1, o->theta2, o->pressure);
    const auto chain = forward_kinematics(model, cfg);
    json doc = to_json(chain);
    doc["configuration"] = to_json(cfg);
    emit(doc);
    std::cerr << "tip at " << chain.tip.position.transpose() << " mm\n";
    code = kOk;
  });
}

void register_solve(CLI::App& app, int& code) {
  struct Opts {
    ModelOptions model;
    std::string target;
    double tol = 0.5;
    int max_evals = 5000;
    std::optional<double> twist;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("solve", "Find a configuration whose tip reaches a target");
  add_model_options(cmd, o->model);
  cmd->add_option("-t,--target", o->target, "Target x,y,z (mm)")->required();
  cmd->add_option("--tol", o->tol, "Position tolerance (mm)")->check(CLI::PositiveNumber);
  cmd->add_option("--max-evals", o->max_evals, "Evaluation budget")->check(CLI::Range(100, 10000000));
  cmd->add_option("--twist", o->twist, "Optional tip twist target (deg)");
  cmd->callback([o, &code] {
    const ActuatorModel model = load_model(o->model);
    SolveRequest req;
    req.target = parse_target(o->target);
    req.tolerance_mm = o->tol;
    req.max_evals = o->max_evals;
    req.twist_target_deg = o->twist;
    const auto result = solve(model, req);
    emit(to_json(result));
    std::cerr << (result.status == SolveStatus::Converged ? "converged" : "best effort")
              << ", residual " << result.residual_mm << " mm after " << result.evals
              << " evaluations\n";
    code = result.status == SolveStatus::Converged ? kOk : kInfeasible;
  });
}

void register_fit_material(CLI::App& app, int& code) {
  struct Opts {
    std::string csv;
    std::string out;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("fit-material", "Fit a first-order Ogden model to uniaxial data");
  cmd->add_option("csv", o->csv, "CSV with header lambda,stress_mpa")->required();
  cmd->add_option("-o,--out", o->out, "Write the fitted material config here");
  cmd->callback([o, &code] {
    if (!fs::exists(o->csv)) throw ConfigError("no such file '" + o->csv + "'");
    const auto samples = read_stress_strain_csv(o->csv);
    const auto fit = fit_ogden(samples);
    if (!o->out.empty()) {
      MaterialConfig mc;
      mc.ogden = fit.model;
      write_json_file(o->out, to_json(mc));
    }
    emit(to_json(fit));
    std::cerr << "mu " << fit.model.mu_mpa << " MPa, alpha " << fit.model.alpha << ", rmse "
              << fit.rmse_mpa << " MPa\n";
    code = kOk;
  });
}

void register_gait(CLI::App& app, int& code) {
  struct Opts {
    ModelOptions model;
    std::string direction = "+x";
    int cycles = 1;
    double pressure = 0.5;
    std::string out;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("gait", "Quadruped gait plan and simulated body motion");
  add_model_options(cmd, o->model);
  cmd->add_option("-d,--direction", o->direction, "+x, -x, +y, -y, cw or ccw")
      ->check(CLI::IsMember({"+x", "-x", "+y", "-y", "cw", "ccw"}));
  cmd->add_option("--cycles", o->cycles, "Cycles to simulate")->check(CLI::Range(0, 100000));
  cmd->add_option("-p,--pressure", o->pressure, "Drive pressure (MPa)");
  cmd->add_option("-o,--out", o->out, "Write the plan JSON here as well");
  cmd->callback([o, &code] {
    const ActuatorModel model = load_model(o->model);
    apps::GaitParams params;
    params.pressure_mpa = o->pressure;
    const auto seq = apps::gait_plan(apps::parse_gait_direction(o->direction), model.geometry, params);
    const auto trajectory = apps::simulate_gait(model, seq, o->cycles, params);
    json poses = json::array();
    for (const auto& p : trajectory) {
      poses.push_back({{"t_s", p.t_s}, {"x_mm", p.x_mm}, {"y_mm", p.y_mm}, {"yaw_deg", p.yaw_deg}});
    }
    json doc = to_json(seq);
    doc["trajectory"] = poses;
    if (!o->out.empty()) write_json_file(o->out, to_json(seq));
    emit(doc);
    const auto& last = trajectory.back();
    std::cerr << seq.label << ": after " << o->cycles << " cycle(s) body at (" << last.x_mm << ", "
              << last.y_mm << ") mm, yaw " << last.yaw_deg << " deg\n";
    code = kOk;
  });
}

void register_grip(CLI::App& app, int& code) {
  struct Opts {
    std::string layout;
    double size = 0.0;
    std::string shape = "compact";
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("grip", "Choose a grip mode for an object");
  cmd->add_option("-l,--layout", o->layout, "Gripper layout JSON (default: built-in layout)")
      ->check(CLI::ExistingFile);
  cmd->add_option("-s,--size", o->size, "Characteristic object size (mm)")->required();
  cmd->add_option("--shape", o->shape, "compact, flat, oversized or delicate")
      ->check(CLI::IsMember({"compact", "flat", "oversized", "delicate"}));
  cmd->callback([o, &code] {
    const apps::GripperLayout layout =
        o->layout.empty() ? apps::GripperLayout{} : load_gripper_layout(o->layout);
    const auto plan = apps::plan_grip(layout, {o->size, apps::parse_object_shape(o->shape)});
    const json doc = {{"mode", std::string(to_string(plan.mode))},
                      {"opening_mm", plan.opening_mm},
                      {"lean_deg", plan.lean_deg},
                      {"max_opening_mm", apps::max_enhanced_opening(layout)},
                      {"plan", to_json(plan.sequence)}};
    emit(doc);
    std::cerr << "grip mode " << to_string(plan.mode) << ", opening " << plan.opening_mm << " mm\n";
    code = kOk;
  });
}

void register_force(CLI::App& app, int& code) {
  struct Opts {
    ModelOptions model;
    double theta1 = 0.0;
    double pressure = 0.5;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("force", "Qualitative blocking-force estimate");
  add_model_options(cmd, o->model);
  cmd->add_option("--theta1", o->theta1, "Unit rotation (deg)");
  cmd->add_option("-p,--pressure", o->pressure, "Pressure (MPa)");
  cmd->callback([o, &code] {
    const ActuatorModel model = load_model(o->model);
    const double f = apps::blocking_force(model.geometry, model.material, o->theta1, o->pressure);
    emit({{"theta1_deg", o->theta1},
          {"pressure_mpa", o->pressure},
          {"gap_mm", gap(model.geometry, o->theta1)},
          {"expansion_mm", expansion(model.material, o->pressure)},
          {"blocking_force_n", f}});
    std::cerr << "blocking force " << f << " N (trend estimate)\n";
    code = kOk;
  });
}

void register_manipulate(CLI::App& app, int& code) {
  struct Opts {
    std::string layout;
    std::string kind = "translate";
    double shift = 20.0;
    double twist_theta1 = 30.0;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("manipulate", "Object manipulation sequence templates");
  cmd->add_option("-l,--layout", o->layout, "Gripper layout JSON (default: built-in layout)")
      ->check(CLI::ExistingFile);
  cmd->add_option("-k,--kind", o->kind, "translate, rotate-parallel or rotate-twist")
      ->check(CLI::IsMember({"translate", "rotate-parallel", "rotate-twist"}));
  cmd->add_option("--shift", o->shift, "Mixed-mode swing while holding (deg)");
  cmd->add_option("--twist-theta1", o->twist_theta1, "Mode 1 unit rotation for twisting (deg)");
  cmd->callback([o, &code] {
    const apps::GripperLayout layout =
        o->layout.empty() ? apps::GripperLayout{} : load_gripper_layout(o->layout);
    apps::ManipulationParams params{o->shift, o->twist_theta1};
    const auto seq =
        apps::manipulation_plan(apps::parse_manipulation_kind(o->kind), layout, params);
    emit(to_json(seq));
    std::cerr << seq.label << ": " << seq.steps.size() << " steps\n";
    code = kOk;
  });
}

}  // namespace rtspa::cli
