#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "rtspa/errors.hpp"
#include "rtspa/inverse_solver.hpp"
#include "rtspa/simplex_search.hpp"

using namespace rtspa;

TEST(Simplex, QuadraticBowl) {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 0.3) * (x[0] - 0.3) + 4.0 * (x[1] - 0.7) * (x[1] - 0.7);
  };
  const auto r = minimize_in_unit_box(f, {0.9, 0.1}, {});
  EXPECT_NEAR(r.x[0], 0.3, 1e-6);
  EXPECT_NEAR(r.x[1], 0.7, 1e-6);
  EXPECT_LE(r.evals, SimplexOptions{}.max_evals);
}

TEST(Simplex, StaysInBox) {
  const Objective f = [](std::span<const double> x) {
    EXPECT_GE(x[0], 0.0);
    EXPECT_LE(x[0], 1.0);
    return -x[0];
  };
  const auto r = minimize_in_unit_box(f, {0.5}, {});
  EXPECT_NEAR(r.x[0], 1.0, 1e-9);
}

TEST(Simplex, RespectsBudgetAndTarget) {
  int calls = 0;
  const Objective f = [&](std::span<const double> x) {
    ++calls;
    return std::abs(x[0] - 0.25) + std::abs(x[1] - 0.5);
  };
  SimplexOptions opt;
  opt.max_evals = 40;
  const auto r = minimize_in_unit_box(f, {0.9, 0.9}, opt);
  EXPECT_EQ(calls, r.evals);
  EXPECT_LE(r.evals, 40);
  opt.max_evals = 5000;
  opt.target = 0.01;
  const auto t = minimize_in_unit_box(f, {0.9, 0.9}, opt);
  EXPECT_LE(t.f, 0.01);
}

TEST(Solve, RoundTripReference) {
  const auto model = make_model(ActuatorGeometry{});
  SolveRequest req;
  req.target = forward_kinematics(model, make_configuration(20, 0, 0.3)).tip.position;
  const auto r = solve(model, req);
  EXPECT_EQ(r.status, SolveStatus::Converged);
  EXPECT_LE(r.residual_mm, 0.5);
  EXPECT_NEAR(r.residual_mm, (r.achieved - req.target).norm(), 1e-12);
  EXPECT_LE(r.evals, 5000);
}

TEST(Solve, UnpressurisedChainPoint) {
  const auto model = make_model(ActuatorGeometry{});
  SolveRequest req;
  req.target = {0, 0, 40.0};
  const auto r = solve(model, req);
  EXPECT_EQ(r.status, SolveStatus::Converged);
  EXPECT_LT(r.configuration.pressure_mpa, 0.2);
}

TEST(Solve, Errors) {
  const auto model = make_model(ActuatorGeometry{});
  SolveRequest req;
  req.target = {0, 0, 400.0};
  EXPECT_THROW(solve(model, req), UnreachableTarget);
  req.target = {0, 0, 30};
  req.tolerance_mm = 0.0;
  EXPECT_THROW(solve(model, req), DomainError);
  req.tolerance_mm = 0.5;
  req.max_evals = 50;
  EXPECT_THROW(solve(model, req), DomainError);
}

TEST(Solve, TwistTarget) {
  const auto model = make_model(ActuatorGeometry{});
  const auto cfg = make_configuration(25, 5, 0.45);
  SolveRequest req;
  req.target = forward_kinematics(model, cfg).tip.position;
  req.twist_target_deg = tip_twist(model, cfg);
  const auto r = solve(model, req);
  EXPECT_EQ(r.status, SolveStatus::Converged);
  EXPECT_NEAR(r.twist_deg, *req.twist_target_deg, 5.0);
}

TEST(SolveProperty, RoundTripDeterminismSymmetry) {
  gen::Rng rng(2024);
  const auto model = make_model(ActuatorGeometry{});
  for (int i = 0; i < 25; ++i) {
    const auto cfg = gen::configuration(rng, model.geometry);
    SolveRequest req;
    req.target = forward_kinematics(model, cfg).tip.position;
    const auto a = solve(model, req);
    EXPECT_EQ(a.status, SolveStatus::Converged);
    const auto b = solve(model, req);
    EXPECT_EQ(a.configuration.transform.theta1_deg, b.configuration.transform.theta1_deg);
    EXPECT_EQ(a.configuration.pressure_mpa, b.configuration.pressure_mpa);
    EXPECT_EQ(a.evals, b.evals);
    SolveRequest mirrored = req;
    mirrored.target.x() = -mirrored.target.x();
    const auto m = solve(model, mirrored);
    EXPECT_EQ(m.status, a.status);
    EXPECT_LE(std::abs(m.residual_mm - a.residual_mm), 2.0 * req.tolerance_mm);
  }
}

TEST(Reachability, Samples) {
  const auto model = make_model(ActuatorGeometry{});
  const auto tip = forward_kinematics(model, make_configuration(35, 0, 0.4)).tip.position;
  EXPECT_TRUE(reachability(model, tip).reachable);
  EXPECT_TRUE(reachability(model, Eigen::Vector3d(-tip.x(), tip.y(), tip.z())).reachable);
  EXPECT_FALSE(reachability(model, {0, 0, 500}).reachable);
  EXPECT_FALSE(reachability(model, {0, -30, 5}).reachable);
}
