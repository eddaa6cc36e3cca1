// Calibrates the gripper tip extension against the reference enhanced opening
// and prints (or writes) the resulting layout file.
//
//   calibrate_gripper [target_mm] [out.json]

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "rtspa/apps/gripper.hpp"
#include "rtspa/errors.hpp"
#include "rtspa/io.hpp"

int main(int argc, char** argv) {
  using namespace rtspa;
  double target = apps::kReferenceEnhancedOpeningMm;
  if (argc > 1) target = std::strtod(argv[1], nullptr);
  if (!(target > 0.0)) {
    std::cerr << "usage: calibrate_gripper [target_mm] [out.json]\n";
    return 2;
  }
  try {
    apps::GripperLayout layout;
    layout.tip_extension_mm = apps::calibrate_tip_extension(layout, target);
    std::cerr << "tip extension " << layout.tip_extension_mm << " mm -> max opening "
              << apps::max_enhanced_opening(layout) << " mm\n";
    const std::string text = to_json(layout).dump(2) + "\n";
    if (argc > 2) {
      std::ofstream(argv[2]) << text;
    } else {
      std::cout << text;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
