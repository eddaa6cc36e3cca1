#include "rtspa/simplex_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rtspa {
namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

void clamp_unit(std::vector<double>& x) {
  for (double& v : x) v = std::clamp(v, 0.0, 1.0);
}

double diameter(const std::vector<Vertex>& simplex) {
  double d = 0.0;
  const auto& best = simplex.front().x;
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < best.size(); ++k) {
      s = std::max(s, std::abs(simplex[i].x[k] - best[k]));
    }
    d = std::max(d, s);
  }
  return d;
}

}  // namespace

SimplexResult minimize_in_unit_box(const Objective& objective, std::vector<double> start,
                                   const SimplexOptions& opt) {
  const std::size_t dim = start.size();
  clamp_unit(start);

  SimplexResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evals;
    const double f = objective(x);
    if (f < result.f) {
      result.f = f;
      result.x = x;
    }
    return f;
  };
  auto budget_left = [&] { return result.evals < opt.max_evals; };
  auto done = [&] { return result.f <= opt.target || !budget_left(); };

  eval(start);
  double step = opt.initial_step;

  for (int round = 0; round <= opt.max_restarts && !done(); ++round) {
    const double round_start_f = result.f;

    std::vector<Vertex> simplex;
    simplex.push_back({result.x, result.f});
    for (std::size_t i = 0; i < dim && budget_left(); ++i) {
      auto x = result.x;
      x[i] = x[i] + step <= 1.0 ? x[i] + step : x[i] - step;
      clamp_unit(x);
      simplex.push_back({x, eval(x)});
    }
    if (simplex.size() != dim + 1) break;

    while (!done()) {
      std::stable_sort(simplex.begin(), simplex.end(),
                       [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
      if (diameter(simplex) < opt.x_tol ||
          std::abs(simplex.back().f - simplex.front().f) <= opt.f_tol) {
        break;
      }

      std::vector<double> centroid(dim, 0.0);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i].x[k];
      }
      for (double& c : centroid) c /= static_cast<double>(dim);

      auto along = [&](double coef) {
        std::vector<double> x(dim);
        for (std::size_t k = 0; k < dim; ++k) {
          x[k] = centroid[k] + coef * (simplex.back().x[k] - centroid[k]);
        }
        clamp_unit(x);
        return x;
      };

      auto xr = along(-1.0);
      const double fr = eval(xr);
      if (fr < simplex.front().f) {
        if (done()) { simplex.back() = {xr, fr}; break; }
        auto xe = along(-2.0);
        const double fe = eval(xe);
        simplex.back() = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        continue;
      }
      if (fr < simplex[dim - 1].f) {
        simplex.back() = {xr, fr};
        continue;
      }
      if (done()) break;
      const bool outside = fr < simplex.back().f;
      auto xc = along(outside ? -0.5 : 0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, simplex.back().f)) {
        simplex.back() = {xc, fc};
        continue;
      }
      // shrink toward the best vertex
      for (std::size_t i = 1; i <= dim && !done(); ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
          simplex[i].x[k] = simplex[0].x[k] + 0.5 * (simplex[i].x[k] - simplex[0].x[k]);
        }
        simplex[i].f = eval(simplex[i].x);
      }
    }

    result.restarts = round;
    const bool improved = result.f < round_start_f - opt.f_tol;
    if (round > 0 && !improved) break;
    if (round >= 1) step = std::max(step * 0.5, 1e-4);
  }
  return result;
}

}  // namespace rtspa
