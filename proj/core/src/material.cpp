#include "rtspa/material.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "csv_util.hpp"
#include "rtspa/errors.hpp"
#include "rtspa/parallel.hpp"
#include "rtspa/simplex_search.hpp"

namespace rtspa {
namespace {

constexpr double kMuLo = 1e-6;
constexpr double kMuHi = 10.0;
constexpr double kAlphaLo = 1.0;
constexpr double kAlphaHi = 8.0;
constexpr double kPressureSlack = 1e-12;

OgdenModel from_unit(std::span<const double> u) {
  return {kMuLo + u[0] * (kMuHi - kMuLo), kAlphaLo + u[1] * (kAlphaHi - kAlphaLo)};
}

std::vector<double> to_unit(const OgdenModel& m) {
  return {(m.mu_mpa - kMuLo) / (kMuHi - kMuLo), (m.alpha - kAlphaLo) / (kAlphaHi - kAlphaLo)};
}

void check_fit_input(std::span<const StressStrainSample> s) {
  if (s.size() < 5) {
    throw FitFailure("Ogden fit needs at least 5 samples, got " + std::to_string(s.size()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i].stretch > 0.0) || !std::isfinite(s[i].stress_mpa)) {
      throw FitFailure("sample " + std::to_string(i) + " has a non-positive stretch");
    }
    if (i > 0 && !(s[i].stretch > s[i - 1].stretch)) {
      throw FitFailure("stretches must be strictly increasing (sample " + std::to_string(i) + ")");
    }
    if (i > 0 && s[i].stress_mpa < s[i - 1].stress_mpa) {
      throw FitFailure("stress is not monotone in stretch (sample " + std::to_string(i) + ")");
    }
  }
  if (s.back().stretch < 1.5) {
    throw FitFailure("samples must span stretches up to at least 1.5");
  }
}

void check_pressure(const MaterialModel& mat, double p) {
  if (!(p >= -kPressureSlack && p <= mat.p_max_mpa + kPressureSlack)) {
    std::ostringstream os;
    os << "pressure " << p << " MPa outside [0, " << mat.p_max_mpa << "] MPa";
    throw DomainError(os.str());
  }
}

}  // namespace

double ogden_uniaxial_stress(const OgdenModel& m, double stretch) {
  if (!(stretch > 0.0)) {
    throw DomainError("stretch must be positive, got " + std::to_string(stretch));
  }
  return m.mu_mpa * (std::pow(stretch, m.alpha - 1.0) - std::pow(stretch, -0.5 * m.alpha - 1.0));
}

OgdenFit fit_ogden(std::span<const StressStrainSample> samples) {
  check_fit_input(samples);

  double scale = 0.0;
  for (const auto& s : samples) scale += s.stress_mpa * s.stress_mpa;
  scale = std::max(scale, 1e-300);

  const Objective sse = [&](std::span<const double> u) {
    const OgdenModel m = from_unit(u);
    double acc = 0.0;
    for (const auto& s : samples) {
      const double r = ogden_uniaxial_stress(m, s.stretch) - s.stress_mpa;
      acc += r * r;
    }
    return acc;
  };

  static constexpr std::array<OgdenModel, 8> kStarts{{
      {0.5, 2.0}, {2.0, 2.0}, {5.0, 2.0}, {8.0, 2.0},
      {0.5, 5.0}, {2.0, 5.0}, {5.0, 5.0}, {8.0, 5.0},
  }};

  SimplexOptions opt;
  opt.max_evals = 4000;
  opt.initial_step = 0.1;
  opt.x_tol = 1e-13;
  opt.f_tol = 1e-28 * scale;
  opt.max_restarts = 12;

  std::array<SimplexResult, kStarts.size()> runs;
  parallel_for(kStarts.size(), [&](std::size_t i) {
    runs[i] = minimize_in_unit_box(sse, to_unit(kStarts[i]), opt);
  });

  std::size_t best = 0;
  int evals = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    evals += runs[i].evals;
    if (runs[i].f < runs[best].f) best = i;
  }
  if (!std::isfinite(runs[best].f)) throw FitFailure("Ogden fit diverged");

  OgdenFit fit;
  fit.model = from_unit(runs[best].x);
  fit.rmse_mpa = std::sqrt(runs[best].f / static_cast<double>(samples.size()));
  fit.evaluations = evals;
  fit.best_start = static_cast<int>(best);
  return fit;
}

std::vector<StressStrainSample> synthesize_uniaxial(const OgdenModel& model,
                                                    std::span<const double> stretches,
                                                    double noise_rel, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<StressStrainSample> out;
  out.reserve(stretches.size());
  for (double lambda : stretches) {
    double sigma = ogden_uniaxial_stress(model, lambda);
    if (noise_rel > 0.0) sigma *= 1.0 + noise_rel * noise(rng);
    out.push_back({lambda, sigma});
  }
  return out;
}

std::vector<StressStrainSample> read_stress_strain_csv(std::istream& in) {
  std::vector<StressStrainSample> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (line_no == 1) view = detail::trim(detail::strip_bom(view));
    if (view.empty()) continue;
    if (!header_seen) {
      if (view != "lambda,stress_mpa") {
        throw ConfigError("expected header 'lambda,stress_mpa', got '" + std::string(view) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = detail::split(view);
    if (fields.size() != 2) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 2 fields");
    }
    out.push_back({detail::parse_number<double>(fields[0], line_no),
                   detail::parse_number<double>(fields[1], line_no)});
  }
  if (!header_seen) throw ConfigError("stress-strain CSV is empty");
  return out;
}

std::vector<StressStrainSample> read_stress_strain_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stress-strain CSV '" + path + "'");
  return read_stress_strain_csv(in);
}

void write_stress_strain_csv(std::ostream& out, std::span<const StressStrainSample> samples) {
  out << "lambda,stress_mpa\n";
  for (const auto& s : samples) {
    out << detail::format_double(s.stretch) << ',' << detail::format_double(s.stress_mpa) << '\n';
  }
}

MaterialModel make_material(const OgdenModel& ogden, const ActuatorGeometry& geom) {
  MaterialModel m;
  m.ogden = ogden;
  m.face_side_mm = geom.face_side_mm;
  m.wall_thickness_mm = geom.wall_thickness_mm;
  m.p_max_mpa = geom.p_max_mpa;
  return m;
}

MaterialModel default_material(const ActuatorGeometry& geom) {
  return make_material(kSyntheticFilament, geom);
}

double membrane_deflection(const MaterialModel& mat, double p) {
  check_pressure(mat, p);
  const double a = 0.5 * mat.face_side_mm;
  const double stiffness = mat.membrane_constant * mat.ogden.initial_modulus_mpa() *
                           mat.wall_thickness_mm / (a * a * a * a);
  return std::cbrt(std::max(p, 0.0) / stiffness);
}

double expansion(const MaterialModel& mat, double p) {
  return 2.0 * membrane_deflection(mat, p);
}

double peak_membrane_strain(const MaterialModel& mat, double p) {
  const double ratio = membrane_deflection(mat, p) / (0.5 * mat.face_side_mm);
  return 2.0 / 3.0 * ratio * ratio;
}

double select_wall_thickness(std::span<const double> candidates, const ActuatorGeometry& geom,
                             const MaterialModel& mat, double p_design,
                             const ThicknessCriteria& criteria) {
  if (candidates.empty()) throw DomainError("no wall thickness candidates given");
  if (!(p_design >= 0.0 && p_design <= geom.p_max_mpa + kPressureSlack)) {
    throw DomainError("design pressure outside [0, p_max]");
  }
  struct Option {
    double t;
    double strain;
    double expansion;
  };
  std::vector<Option> feasible;
  std::ostringstream listing;
  for (double t : candidates) {
    if (!(t > 0.0)) throw DomainError("wall thickness must be positive");
    MaterialModel m = mat;
    m.wall_thickness_mm = t;
    const double strain = peak_membrane_strain(m, p_design);
    listing << " t=" << t << "mm strain=" << strain << ';';
    if (strain < criteria.strain_cap) feasible.push_back({t, strain, expansion(m, p_design)});
  }
  if (feasible.empty()) {
    std::ostringstream os;
    os << "no wall thickness keeps peak strain below " << criteria.strain_cap << ':'
       << listing.str();
    throw InfeasibleError(os.str());
  }
  const auto thinnest = std::min_element(
      feasible.begin(), feasible.end(), [](const Option& a, const Option& b) { return a.t < b.t; });
  double chosen = thinnest->t;
  const double floor = thinnest->expansion * (1.0 - criteria.tie_tolerance);
  for (const auto& o : feasible) {
    if (o.expansion >= floor) chosen = std::max(chosen, o.t);
  }
  return chosen;
}

}  // namespace rtspa
