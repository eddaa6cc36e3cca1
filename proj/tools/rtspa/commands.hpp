#pragma once

#include <CLI11.hpp>

namespace rtspa::cli {

enum ExitCode { kOk = 0, kInfeasible = 1, kUsage = 2 };

// Each register_* adds a subcommand whose callback stores its exit code.
void register_validate(CLI::App& app, int& code);
void register_workspace(CLI::App& app, int& code);
void register_fk(CLI::App& app, int& code);
void register_solve(CLI::App& app, int& code);
void register_fit_material(CLI::App& app, int& code);
void register_gait(CLI::App& app, int& code);
void register_grip(CLI::App& app, int& code);
void register_force(CLI::App& app, int& code);
void register_manipulate(CLI::App& app, int& code);

}  // namespace rtspa::cli
