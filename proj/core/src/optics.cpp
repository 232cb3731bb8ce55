#include "wva/optics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wva/error.hpp"

namespace wva {

using std::numbers::ln2;
using std::numbers::pi;

double SetupParams::gamma() const { return overlap_gamma(nu_minus_thz(), bandwidth_thz); }

void SetupParams::validate() const {
  for (double v : {nu0_thz, bandwidth_thz, tau_ps, phi_rad, lcvr_rad, beta_rad, nu1_thz, nu2_thz, amplitude}) {
    if (!std::isfinite(v)) throw InvalidArgument("setup parameters must be finite");
  }
  if (!(bandwidth_thz > 0.0)) throw InvalidArgument("setup: bandwidth B must be positive");
  if (!(nu0_thz > 0.0)) throw InvalidArgument("setup: carrier frequency must be positive");
  if (std::abs(beta_rad) > pi / 2 + 1e-12) throw InvalidArgument("setup: beta must lie in [-pi/2, pi/2]");
}

PolarizedFieldSpectrum::PolarizedFieldSpectrum(FrequencyGrid g, std::vector<std::complex<double>> x,
                                               std::vector<std::complex<double>> y)
    : grid(g), ex(std::move(x)), ey(std::move(y)) {
  if (ex.size() != grid.size() || ey.size() != grid.size()) {
    throw InvalidArgument("field spectrum: component length does not match grid");
  }
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (!std::isfinite(ex[i].real()) || !std::isfinite(ex[i].imag()) || !std::isfinite(ey[i].real()) ||
        !std::isfinite(ey[i].imag())) {
      throw InvalidArgument("field spectrum: non-finite value at node " + std::to_string(i));
    }
  }
}

double pulse_bandwidth(double t_fwhm_ps) {
  if (!(t_fwhm_ps > 0.0)) throw InvalidArgument("pulse duration must be positive");
  return std::sqrt(ln2) / (pi * t_fwhm_ps);
}

double power_fwhm(double bandwidth_thz) { return 2.0 * bandwidth_thz * std::sqrt(ln2); }

double bandwidth_from_power_fwhm(double fwhm_thz) { return fwhm_thz / (2.0 * std::sqrt(ln2)); }

double relative_phase(double nu_thz, double nu0_thz, double tau_ps, double delta_rad) noexcept {
  return 2.0 * pi * (nu_thz - nu0_thz) * tau_ps + delta_rad;
}

PolarizedFieldSpectrum jones_field(const SetupParams& p, const FrequencyGrid& g) {
  p.validate();
  const double scale = p.amplitude / std::sqrt(2.0);
  const double two_b2 = 2.0 * p.bandwidth_thz * p.bandwidth_thz;
  const double delta = p.delta_rad();
  std::vector<std::complex<double>> ex(g.size());
  std::vector<std::complex<double>> ey(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double nu = g.node(i);
    const double dx = nu - p.nu0_thz - p.nu1_thz;
    const double dy = nu - p.nu0_thz - p.nu2_thz;
    ex[i] = scale * std::exp(-dx * dx / two_b2);
    ey[i] = scale * std::exp(-dy * dy / two_b2) * std::polar(1.0, relative_phase(nu, p.nu0_thz, p.tau_ps, delta));
  }
  return {g, std::move(ex), std::move(ey)};
}

PolarizedFieldSpectrum field_from_reflections(const Spectrum& x_power, const Spectrum& y_power, double nu0_thz,
                                              double tau_ps, double delta_rad, double amplitude) {
  if (!(x_power.grid() == y_power.grid())) {
    throw InvalidArgument("field_from_reflections: arms sampled on different grids");
  }
  const FrequencyGrid& g = x_power.grid();
  const double scale = amplitude / std::sqrt(2.0);
  std::vector<std::complex<double>> ex(g.size());
  std::vector<std::complex<double>> ey(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    ex[i] = scale * std::sqrt(x_power[i]);
    ey[i] = scale * std::sqrt(y_power[i]) * std::polar(1.0, relative_phase(g.node(i), nu0_thz, tau_ps, delta_rad));
  }
  return {g, std::move(ex), std::move(ey)};
}

Spectrum post_select(const PolarizedFieldSpectrum& f, double beta_rad) {
  const double c = std::cos(beta_rad);
  const double s = std::sin(beta_rad);
  std::vector<double> out(f.grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(c * f.ex[i] + s * f.ey[i]);
  return Spectrum(f.grid, std::move(out));
}

Spectrum output_spectrum_analytic(const SetupParams& p, const FrequencyGrid& g) {
  p.validate();
  const double c = std::cos(p.beta_rad);
  const double s = std::sin(p.beta_rad);
  const double half_s0 = 0.5 * p.amplitude * p.amplitude;
  const double b2 = p.bandwidth_thz * p.bandwidth_thz;
  const double gamma = p.gamma();
  const double delta = p.delta_rad();
  const double nu_plus = p.nu_plus_thz();

  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double nu = g.node(i);
    const double d1 = nu - p.nu0_thz - p.nu1_thz;
    const double d2 = nu - p.nu0_thz - p.nu2_thz;
    const double dp = nu - p.nu0_thz - nu_plus;
    const double value = c * c * std::exp(-d1 * d1 / b2) + s * s * std::exp(-d2 * d2 / b2) +
                         2.0 * c * s * gamma * std::exp(-dp * dp / b2) *
                             std::cos(relative_phase(nu, p.nu0_thz, p.tau_ps, delta));
    // Exact cancellation at a dark port can leave a tiny negative rounding residue.
    out[i] = half_s0 * std::max(value, 0.0);
  }
  return Spectrum(g, std::move(out));
}

double overlap_gamma(double nu_minus_thz, double bandwidth_thz) {
  if (!(bandwidth_thz > 0.0)) throw InvalidArgument("overlap: bandwidth must be positive");
  const double r = nu_minus_thz / bandwidth_thz;
  return std::exp(-r * r);
}

double amplification_factor(double beta_rad, double gamma, double delta_rad) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidArgument("amplification factor: gamma must lie in (0, 1]");
  const double denominator = 1.0 + gamma * std::sin(2.0 * beta_rad) * std::cos(delta_rad);
  if (std::abs(denominator) <= kSingularDenominator) {
    throw SingularPostSelection("post-selection extinguishes the mean (1 + gamma sin2b cos delta = 0)");
  }
  return std::cos(2.0 * beta_rad) / denominator;
}

AmplificationPeak max_amplification(double gamma, double delta_rad) {
  const double g = gamma * std::cos(delta_rad);
  if (!(std::abs(g) < 1.0)) {
    throw UnboundedAmplification("|gamma cos delta| >= 1: amplification is unbounded");
  }
  const double half_arc = 0.5 * std::asin(g);
  double conjugate = -pi / 2 + half_arc;
  if (conjugate <= -pi / 2) conjugate += pi;
  return {1.0 / std::sqrt(1.0 - g * g), -half_arc, conjugate};
}

CentroidPrediction analytic_centroid(const SetupParams& p) {
  p.validate();
  const double a = amplification_factor(p.beta_rad, p.gamma(), p.delta_rad());
  const bool weak = std::abs(p.nu_minus_thz()) <= 0.1 * p.bandwidth_thz &&
                    std::abs(p.tau_ps) <= 0.01 / p.bandwidth_thz;
  return {p.nu0_thz + p.nu_plus_thz() + a * p.nu_minus_thz(), a, weak};
}

}  // namespace wva
