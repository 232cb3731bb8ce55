#include "wva/fbg.hpp"

#include <cmath>
#include <vector>

#include "wva/error.hpp"

namespace wva {

void FbgParams::validate() const {
  if (!(center_ref_thz > 0.0) || !std::isfinite(center_ref_thz)) throw InvalidArgument("fbg: center must be positive");
  if (!std::isfinite(kappa_nm_per_c)) throw InvalidArgument("fbg: kappa must be finite");
  if (!(bandwidth_thz > 0.0) || !std::isfinite(bandwidth_thz)) throw InvalidArgument("fbg: bandwidth must be positive");
  if (!(reflect_efficiency > 0.0 && reflect_efficiency <= 1.0)) {
    throw InvalidArgument("fbg: reflection efficiency must lie in (0, 1]");
  }
  if (side_lobe) {
    if (!(side_lobe->rel_amplitude >= 0.0 && side_lobe->rel_amplitude < 1.0)) {
      throw InvalidArgument("fbg: side-lobe relative amplitude must lie in [0, 1)");
    }
    if (!(side_lobe->width_thz > 0.0)) throw InvalidArgument("fbg: side-lobe width must be positive");
    if (!std::isfinite(side_lobe->offset_thz)) throw InvalidArgument("fbg: side-lobe offset must be finite");
  }
}

double FbgParams::kappa_thz_per_c(const UnitContext& units) const { return units.shift_nm_to_thz(kappa_nm_per_c); }

double bragg_center(const FbgParams& f, double t_c, double t_ref_c, const UnitContext& units) {
  return f.center_ref_thz + f.kappa_thz_per_c(units) * (t_c - t_ref_c);
}

Spectrum reflect(const FbgParams& f, double source_bandwidth_thz, double source_nu0_thz, double center_thz,
                 const FrequencyGrid& g) {
  f.validate();
  if (!(source_bandwidth_thz > 0.0)) throw InvalidArgument("reflect: source bandwidth must be positive");
  if (!g.contains(center_thz)) throw InvalidArgument("reflect: Bragg center lies outside the frequency grid");

  const double ds = (center_thz - source_nu0_thz) / source_bandwidth_thz;
  const double scale = f.reflect_efficiency * std::exp(-ds * ds);
  const double b2 = f.bandwidth_thz * f.bandwidth_thz;

  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double d = g.node(i) - center_thz;
    double v = std::exp(-d * d / b2);
    if (f.side_lobe) {
      const double x = (d - f.side_lobe->offset_thz) / f.side_lobe->width_thz;
      v += f.side_lobe->rel_amplitude * std::exp(-x * x);
    }
    out[i] = scale * v;
  }
  return Spectrum(g, std::move(out));
}

double centroid_shift_model(double dt_c, double kappa_nm_per_c, double a, double static_offset_nm) {
  return 0.5 * kappa_nm_per_c * (a + 1.0) * dt_c + (a + 1.0) * 0.5 * static_offset_nm;
}

CalibrationResult fit_sensitivity(std::span<const CalibrationPoint> points) {
  const std::size_t n = points.size();
  if (n < 2) throw DegenerateFit("calibration: need at least two points");

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& p : points) {
    if (!std::isfinite(p.dt_c) || !std::isfinite(p.shift_nm)) throw InvalidArgument("calibration: non-finite point");
    mean_x += p.dt_c;
    mean_y += p.shift_nm;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& p : points) {
    const double dx = p.dt_c - mean_x;
    sxx += dx * dx;
    sxy += dx * (p.shift_nm - mean_y);
  }
  bool distinct = false;
  for (const auto& p : points) distinct = distinct || p.dt_c != points.front().dt_c;
  if (!distinct || sxx == 0.0) throw DegenerateFit("calibration: all temperature differences are equal");

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  double ss = 0.0;
  for (const auto& p : points) {
    const double r = p.shift_nm - (intercept + slope * p.dt_c);
    ss += r * r;
  }
  return {slope, intercept, std::sqrt(ss / static_cast<double>(n)), n};
}

}  // namespace wva
