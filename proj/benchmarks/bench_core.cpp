#include <benchmark/benchmark.h>

#include <random>

#include "rtspa/convex_hull.hpp"
#include "rtspa/inverse_solver.hpp"
#include "rtspa/material.hpp"
#include "rtspa/workspace.hpp"

using namespace rtspa;

static void BM_ForwardKinematics(benchmark::State& state) {
  const auto model = make_model(ActuatorGeometry{});
  const auto cfg = make_configuration(30.0, 10.0, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(forward_kinematics(model, cfg));
}
BENCHMARK(BM_ForwardKinematics);

static void BM_SweepMode1(benchmark::State& state) {
  const auto model = make_model(ActuatorGeometry{});
  SweepSpec spec;
  spec.pressure_steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(model, spec));
}
BENCHMARK(BM_SweepMode1)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_HullMirroredCloud(benchmark::State& state) {
  const auto model = make_model(ActuatorGeometry{});
  const auto cloud = mirror_yz(sweep(model, SweepSpec{}));
  std::vector<Eigen::Vector3d> pts;
  for (const auto& s : cloud) pts.push_back(s.position);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull_volume(pts));
}
BENCHMARK(BM_HullMirroredCloud)->Unit(benchmark::kMillisecond);

static void BM_HullRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Eigen::Vector3d> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) p = {n(rng), n(rng), n(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull_volume(pts));
}
BENCHMARK(BM_HullRandom)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Solve(benchmark::State& state) {
  const auto model = make_model(ActuatorGeometry{});
  SolveRequest req;
  req.target = forward_kinematics(model, make_configuration(-25.0, 15.0, 0.35)).tip.position;
  for (auto _ : state) benchmark::DoNotOptimize(solve(model, req));
}
BENCHMARK(BM_Solve)->Unit(benchmark::kMicrosecond);

static void BM_FitOgden(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(1.0 + 0.05 * i);
  const auto data = synthesize_uniaxial({0.8, 2.5}, grid, 0.01, 3);
  for (auto _ : state) benchmark::DoNotOptimize(fit_ogden(data));
}
BENCHMARK(BM_FitOgden)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
