#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace rtspa {

// Bounded Nelder-Mead on the unit box [0, 1]^d. Trial points are projected
// back into the box. When the simplex collapses the search restarts from the
// best vertex with a smaller simplex, as long as the budget allows and the
// previous round improved the objective.

using Objective = std::function<double(std::span<const double>)>;

struct SimplexOptions {
  int max_evals = 2000;
  double initial_step = 0.1;
  double x_tol = 1e-9;   ///< simplex diameter at which a round stops
  double f_tol = 1e-14;  ///< objective spread at which a round stops
  int max_restarts = 8;
  /// Stop as soon as the objective drops to or below this value.
  double target = -std::numeric_limits<double>::infinity();
};

struct SimplexResult {
  std::vector<double> x;
  double f = std::numeric_limits<double>::infinity();
  int evals = 0;
  int restarts = 0;
};

SimplexResult minimize_in_unit_box(const Objective& objective,
                                   std::vector<double> start,
                                   const SimplexOptions& options);

}  // namespace rtspa
