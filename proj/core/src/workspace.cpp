#include "rtspa/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <string>

#include "csv_util.hpp"
#include "rtspa/angles.hpp"
#include "rtspa/convex_hull.hpp"
#include "rtspa/errors.hpp"
#include "rtspa/parallel.hpp"

namespace rtspa {

std::string_view to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::Bending: return "bending";
    case SweepMode::Mode1: return "mode1";
    case SweepMode::Mode2: return "mode2";
  }
  return "?";
}

SweepMode parse_sweep_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "bending") return SweepMode::Bending;
  if (lower == "mode1") return SweepMode::Mode1;
  if (lower == "mode2") return SweepMode::Mode2;
  throw DomainError("unknown sweep mode '" + std::string(text) + "' (bending, mode1, mode2)");
}

std::vector<double> angle_levels(double limit_deg, double step_deg) {
  if (!(step_deg > 0.0)) throw DomainError("angle step must be positive");
  if (!(limit_deg >= 0.0)) throw DomainError("angle limit must be non-negative");
  std::vector<double> levels;
  for (int k = 0;; ++k) {
    const double v = k * step_deg;
    if (v >= limit_deg - kAngleSlackDeg) break;
    levels.push_back(v);
  }
  levels.push_back(limit_deg);
  return levels;
}

std::vector<WorkspaceSample> sweep(const ActuatorModel& model, const SweepSpec& spec) {
  if (spec.pressure_steps < 2) throw DomainError("pressure_steps must be at least 2");
  std::vector<int> markers = spec.markers;
  if (markers.empty()) {
    for (int m = 0; m < kMarkerCount; ++m) markers.push_back(m);
  }
  for (int m : markers) {
    if (m < 0 || m >= kMarkerCount) throw DomainError("marker index out of range: " + std::to_string(m));
  }

  const auto& geom = model.geometry;
  std::vector<double> levels;
  switch (spec.mode) {
    case SweepMode::Bending: levels = {0.0}; break;
    case SweepMode::Mode1: levels = angle_levels(theta1_max(geom), spec.angle_step_deg); break;
    case SweepMode::Mode2: levels = angle_levels(mode2_limit(geom), spec.angle_step_deg); break;
  }
  if (spec.mode == SweepMode::Bending && !(spec.angle_step_deg > 0.0)) {
    throw DomainError("angle step must be positive");
  }

  const std::size_t np = static_cast<std::size_t>(spec.pressure_steps);
  const std::size_t per_point = markers.size();
  std::vector<WorkspaceSample> out(levels.size() * np * per_point);
  parallel_for(levels.size() * np, [&](std::size_t idx) {
    const double level = levels[idx / np];
    const std::size_t k = idx % np;
    const double p = geom.p_max_mpa * static_cast<double>(k) / static_cast<double>(np - 1);
    double t1 = 0.0, t2 = 0.0;
    if (spec.mode == SweepMode::Mode1) t1 = level;
    if (spec.mode == SweepMode::Mode2) t2 = level, t1 = -level;
    const auto cfg = make_configuration(t1, t2, p);
    const PoseChain chain = forward_kinematics(model, cfg);
    for (std::size_t j = 0; j < per_point; ++j) {
      auto& s = out[idx * per_point + j];
      s.position = chain.markers[markers[j]];
      s.marker = markers[j];
      s.theta1_deg = t1;
      s.theta2_deg = t2;
      s.pressure_mpa = p;
      s.mirrored = false;
    }
  });
  return out;
}

std::vector<WorkspaceSample> mirror_yz(std::span<const WorkspaceSample> samples) {
  std::vector<WorkspaceSample> out(samples.begin(), samples.end());
  out.reserve(2 * samples.size());
  for (const auto& s : samples) {
    WorkspaceSample m = s;
    m.position.x() = -m.position.x();
    m.mirrored = !s.mirrored;
    out.push_back(m);
  }
  return out;
}

WorkspaceMetrics workspace_metrics(std::span<const WorkspaceSample> samples) {
  WorkspaceMetrics m;
  m.sample_count = samples.size();
  if (samples.empty()) return m;
  m.bbox_min = m.bbox_max = samples.front().position;
  std::vector<Eigen::Vector3d> points;
  points.reserve(samples.size());
  bool have_tip = false;
  Eigen::Vector3d tip_lo, tip_hi;
  for (const auto& s : samples) {
    m.bbox_min = m.bbox_min.cwiseMin(s.position);
    m.bbox_max = m.bbox_max.cwiseMax(s.position);
    points.push_back(s.position);
    if (s.marker == kMarkerCount - 1) {
      if (!have_tip) tip_lo = tip_hi = s.position, have_tip = true;
      tip_lo = tip_lo.cwiseMin(s.position);
      tip_hi = tip_hi.cwiseMax(s.position);
    }
  }
  m.hull_volume_mm3 = convex_hull_volume(points);
  if (have_tip) m.tip_excursion_mm = tip_hi - tip_lo;
  return m;
}

void write_workspace_csv(std::ostream& out, std::span<const WorkspaceSample> samples) {
  using detail::format_double;
  out << kWorkspaceCsvHeader << '\n';
  for (const auto& s : samples) {
    out << format_double(s.position.x()) << ',' << format_double(s.position.y()) << ','
        << format_double(s.position.z()) << ',' << s.marker << ',' << format_double(s.theta1_deg)
        << ',' << format_double(s.theta2_deg) << ',' << format_double(s.pressure_mpa) << ','
        << (s.mirrored ? 1 : 0) << '\n';
  }
}

std::vector<WorkspaceSample> read_workspace_csv(std::istream& in) {
  std::vector<WorkspaceSample> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (line_no == 1) view = detail::trim(detail::strip_bom(view));
    if (view.empty()) continue;
    if (!header_seen) {
      if (view != kWorkspaceCsvHeader) {
        throw ConfigError("unexpected workspace CSV header '" + std::string(view) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto f = detail::split(view);
    if (f.size() != 8) throw ConfigError("line " + std::to_string(line_no) + ": expected 8 fields");
    WorkspaceSample s;
    s.position = {detail::parse_number<double>(f[0], line_no),
                  detail::parse_number<double>(f[1], line_no),
                  detail::parse_number<double>(f[2], line_no)};
    s.marker = detail::parse_number<int>(f[3], line_no);
    s.theta1_deg = detail::parse_number<double>(f[4], line_no);
    s.theta2_deg = detail::parse_number<double>(f[5], line_no);
    s.pressure_mpa = detail::parse_number<double>(f[6], line_no);
    const int flag = detail::parse_number<int>(f[7], line_no);
    if (flag != 0 && flag != 1) throw ConfigError("line " + std::to_string(line_no) + ": mirrored must be 0 or 1");
    if (s.marker < 0 || s.marker >= kMarkerCount) {
      throw ConfigError("line " + std::to_string(line_no) + ": marker out of range");
    }
    s.mirrored = flag == 1;
    out.push_back(s);
  }
  if (!header_seen) throw ConfigError("workspace CSV is empty");
  return out;
}

void write_workspace_ply(std::ostream& out, std::span<const WorkspaceSample> samples) {
  using detail::format_double;
  out << "ply\nformat ascii 1.0\nelement vertex " << samples.size()
      << "\nproperty double x\nproperty double y\nproperty double z\nend_header\n";
  for (const auto& s : samples) {
    out << format_double(s.position.x()) << ' ' << format_double(s.position.y()) << ' '
        << format_double(s.position.z()) << '\n';
  }
}

}  // namespace rtspa
