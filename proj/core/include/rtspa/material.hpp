#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rtspa/geometry.hpp"

namespace rtspa {

struct StressStrainSample {
  double stretch = 1.0;     ///< lambda
  double stress_mpa = 0.0;  ///< nominal (engineering) stress
};

/// One-term Ogden model.
struct OgdenModel {
  double mu_mpa = 0.0;
  double alpha = 0.0;

  /// Small-strain Young's modulus 3*mu*alpha/2 (slope of the uniaxial law at
  /// lambda = 1).
  double initial_modulus_mpa() const { return 1.5 * mu_mpa * alpha; }
  bool valid() const { return mu_mpa > 0.0 && mu_mpa * alpha > 0.0; }
};

/// Generator parameters of the bundled synthetic filament dataset. The raw
/// tensile curve of the real material is not available; these values stand
/// in for it and double as the default material.
inline constexpr OgdenModel kSyntheticFilament{6.0, 4.4};

/// Incompressible uniaxial nominal stress
///   P(lambda) = mu * (lambda^(alpha-1) - lambda^(-alpha/2-1)).
double ogden_uniaxial_stress(const OgdenModel& model, double stretch);

struct OgdenFit {
  OgdenModel model;
  double rmse_mpa = 0.0;
  int evaluations = 0;
  int best_start = 0;
};

/// Least-squares fit of (mu, alpha) with mu in (0, 10] MPa and alpha in
/// [1, 8]. Eight fixed starts; the best RMSE wins, lowest start on ties.
/// Throws FitFailure on fewer than five samples, stretches not strictly
/// increasing, a span below lambda = 1.5, or non-monotone stress.
OgdenFit fit_ogden(std::span<const StressStrainSample> samples);

/// Uniaxial samples generated from a model; optional multiplicative Gaussian
/// noise with relative standard deviation `noise_rel`.
std::vector<StressStrainSample> synthesize_uniaxial(const OgdenModel& model,
                                                    std::span<const double> stretches,
                                                    double noise_rel = 0.0,
                                                    std::uint64_t seed = 0);

/// Reads a `lambda,stress_mpa` CSV. Throws ConfigError on malformed input.
std::vector<StressStrainSample> read_stress_strain_csv(std::istream& in);
std::vector<StressStrainSample> read_stress_strain_csv(const std::string& path);
void write_stress_strain_csv(std::ostream& out,
                             std::span<const StressStrainSample> samples);

// Pillow expansion surrogate: the pillow's front and back faces are square
// membranes of side `face_side` clamped at the edges. Large-deflection
// membrane theory gives the centre deflection w from
//
//   p = c * (E * t / a^4) * w^3,   a = face_side / 2,
//
// and the unit expands by 2w (both faces bulge).

inline constexpr double kMembraneConstant = 3.0;

struct MaterialModel {
  OgdenModel ogden = kSyntheticFilament;
  double face_side_mm = 20.0;
  double wall_thickness_mm = 1.0;
  double p_max_mpa = 0.5;
  double membrane_constant = kMembraneConstant;
};

MaterialModel make_material(const OgdenModel& ogden, const ActuatorGeometry& geom);
MaterialModel default_material(const ActuatorGeometry& geom);

/// Centre deflection of one face (mm).
double membrane_deflection(const MaterialModel& mat, double pressure_mpa);

/// Unit expansion e(p) = 2 w (mm). Throws DomainError outside [0, p_max].
double expansion(const MaterialModel& mat, double pressure_mpa);

/// Peak membrane strain, taken as the mean stretch of a parabolic centre-line
/// profile: 2/3 (w/a)^2.
double peak_membrane_strain(const MaterialModel& mat, double pressure_mpa);

/// Strain cap placed between the predicted strains of the 0.9 mm and 0.7 mm
/// walls for the default material at 0.5 MPa.
inline constexpr double kDefaultStrainCap = 0.094;

struct ThicknessCriteria {
  double strain_cap = kDefaultStrainCap;
  /// Feasible candidates whose expansion is within this relative distance of
  /// the thinnest feasible wall count as tied; the thickest tied wall wins.
  double tie_tolerance = 0.0;
};

/// Thinnest wall whose peak strain at `p_design` stays below the cap.
/// Throws InfeasibleError (listing the strains) when none qualifies.
double select_wall_thickness(std::span<const double> candidates_mm,
                             const ActuatorGeometry& geom,
                             const MaterialModel& mat,
                             double p_design_mpa,
                             const ThicknessCriteria& criteria = {});

}  // namespace rtspa
