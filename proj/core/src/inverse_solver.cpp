#include "rtspa/inverse_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rtspa/errors.hpp"
#include "rtspa/parallel.hpp"
#include "rtspa/simplex_search.hpp"

namespace rtspa {
namespace {

constexpr int kLatticeEvals = 27;
constexpr int kMaxStarts = 8;
constexpr int kBatch = 4;

struct Box {
  double t1max;
  double t2max;
  double pmax;
};

// Maps a unit-box point to a configuration. Corners where motor A would run
// past its travel are pulled back onto the feasible set; the excess (deg) is
// returned so the objective can penalise it.
Configuration decode(std::span<const double> u, const Box& box, double& excess_deg) {
  const double t2 = (2.0 * u[1] - 1.0) * box.t2max;
  double t1 = (2.0 * u[0] - 1.0) * box.t1max;
  const double a = t1 + t2;
  excess_deg = std::max(0.0, std::abs(a) - kMotorTravelDeg);
  if (excess_deg > 0.0) t1 = std::copysign(kMotorTravelDeg, a) - t2;
  const double p = std::clamp(u[2], 0.0, 1.0) * box.pmax;
  return make_configuration(t1, t2, p);
}

struct Evaluation {
  double objective;
  double residual;
};

}  // namespace

SolveResult solve(const ActuatorModel& model, const SolveRequest& req) {
  if (!(req.tolerance_mm > 0.0)) throw DomainError("tolerance must be positive");
  if (req.max_evals < 100) throw DomainError("max_evals must be at least 100");
  if (!req.target.allFinite()) throw DomainError("target must be finite");
  if (req.twist_target_deg && !std::isfinite(*req.twist_target_deg)) {
    throw DomainError("twist target must be finite");
  }
  const double reach = model.geometry.backbone_length_mm();
  if (req.target.norm() > reach) {
    std::ostringstream os;
    os << "target at " << req.target.norm() << " mm from the root; backbone is " << reach
       << " mm long";
    throw UnreachableTarget(os.str());
  }

  const Box box{theta1_max(model.geometry), theta2_max(model.geometry), model.geometry.p_max_mpa};

  auto evaluate = [&](std::span<const double> u) {
    double excess = 0.0;
    const Configuration cfg = decode(u, box, excess);
    const PoseChain chain = forward_kinematics(model, cfg);
    const double residual = (chain.tip.position - req.target).norm();
    double f = residual + excess;
    if (req.twist_target_deg) {
      f += kTwistWeightMmPerDeg * std::abs(twist_about_tangent(chain) - *req.twist_target_deg);
    }
    return Evaluation{f, residual};
  };
  const Objective objective = [&](std::span<const double> u) { return evaluate(u).objective; };

  // Coarse lattice, then local searches from its best cells.
  static constexpr std::array<double, 3> kLevels{1.0 / 6.0, 0.5, 5.0 / 6.0};
  std::vector<std::vector<double>> lattice;
  std::vector<double> lattice_f;
  for (double a : kLevels) {
    for (double b : kLevels) {
      for (double c : kLevels) {
        lattice.push_back({a, b, c});
        lattice_f.push_back(objective(lattice.back()));
      }
    }
  }
  std::vector<int> order(lattice.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return lattice_f[i] < lattice_f[j]; });

  std::vector<double> best_x = lattice[order.front()];
  double best_f = lattice_f[order.front()];
  int best_start = -1;
  int evals = kLatticeEvals;

  SimplexOptions opt;
  opt.max_evals = std::max(1, (req.max_evals - kLatticeEvals) / kMaxStarts);
  opt.initial_step = 0.1;
  opt.x_tol = 1e-10;
  opt.f_tol = 1e-12;
  opt.max_restarts = 8;
  opt.target = 0.1 * req.tolerance_mm;

  for (int batch = 0; batch * kBatch < kMaxStarts; ++batch) {
    std::array<SimplexResult, kBatch> runs;
    parallel_for(kBatch, [&](std::size_t i) {
      runs[i] = minimize_in_unit_box(objective, lattice[order[batch * kBatch + i]], opt);
    });
    for (int i = 0; i < kBatch; ++i) {
      evals += runs[i].evals;
      if (runs[i].f < best_f) {
        best_f = runs[i].f;
        best_x = runs[i].x;
        best_start = batch * kBatch + i;
      }
    }
    if (evaluate(best_x).residual <= req.tolerance_mm &&
        (!req.twist_target_deg || best_f <= opt.target)) {
      break;
    }
  }

  double excess = 0.0;
  SolveResult result;
  result.configuration = decode(best_x, box, excess);
  const PoseChain chain = forward_kinematics(model, result.configuration);
  result.achieved = chain.tip.position;
  result.residual_mm = (result.achieved - req.target).norm();
  result.twist_deg = twist_about_tangent(chain);
  result.evals = evals;
  result.status = result.residual_mm <= req.tolerance_mm ? SolveStatus::Converged
                                                          : SolveStatus::BestEffort;
  result.start_index = best_start;
  return result;
}

Reachability reachability(const ActuatorModel& model, const Eigen::Vector3d& target) {
  try {
    SolveRequest req;
    req.target = target;
    const SolveResult r = solve(model, req);
    return {r.status == SolveStatus::Converged, r.residual_mm};
  } catch (const UnreachableTarget&) {
    return {false, target.norm() - model.geometry.backbone_length_mm()};
  }
}

}  // namespace rtspa
