#include <iostream>

#include "commands.hpp"
#include "rtspa/errors.hpp"

int main(int argc, char** argv) {
  using namespace rtspa::cli;
  CLI::App app{"Transformable soft pneumatic actuator toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rtspa 0.1.0");

  int code = kOk;
  register_validate(app, code);
  register_workspace(app, code);
  register_fk(app, code);
  register_solve(app, code);
  register_fit_material(app, code);
  register_gait(app, code);
  register_grip(app, code);
  register_force(app, code);
  register_manipulate(app, code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const rtspa::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const rtspa::FitFailure& e) {
    std::cerr << "fit failed: " << e.what() << '\n';
    return kInfeasible;
  } catch (const rtspa::MotorSaturation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const rtspa::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
