#pragma once

// Polarization-interferometer model: two orthogonally polarized spectral
// envelopes centered at nu0+nu1 (x) and nu0+nu2 (y), recombined, then
// projected onto cos(beta) x + sin(beta) y.
//
// B is the 1/e half-width of the *field* envelope exp[-(nu-c)^2 / (2 B^2)],
// so power spectra fall off as exp[-(nu-c)^2 / B^2].

#include <complex>
#include <vector>

#include "wva/spectral.hpp"

namespace wva {

struct SetupParams {
  double nu0_thz = kSpeedOfLightNmThz / kDefaultReferenceWavelengthNm;  // carrier
  double bandwidth_thz = 0.15;  // B
  double tau_ps = 0.0;          // path delay
  double phi_rad = 0.0;         // residual birefringence phase
  double lcvr_rad = 0.0;        // compensator phase
  double beta_rad = 0.0;        // post-selection angle
  double nu1_thz = 0.0;         // x-envelope offset from nu0
  double nu2_thz = 0.0;         // y-envelope offset from nu0
  double amplitude = 1.0;       // E0; the power scale S0 is amplitude^2

  double delta_rad() const noexcept { return phi_rad - lcvr_rad; }
  double nu_plus_thz() const noexcept { return 0.5 * (nu1_thz + nu2_thz); }
  double nu_minus_thz() const noexcept { return 0.5 * (nu1_thz - nu2_thz); }
  double gamma() const;

  /// Throws InvalidArgument unless B > 0, nu0 > 0, |beta| <= pi/2 and all fields finite.
  void validate() const;
};

/// x and y complex field envelopes sampled on a common grid.
struct PolarizedFieldSpectrum {
  PolarizedFieldSpectrum(FrequencyGrid grid, std::vector<std::complex<double>> ex,
                         std::vector<std::complex<double>> ey);

  FrequencyGrid grid;
  std::vector<std::complex<double>> ex;
  std::vector<std::complex<double>> ey;
};

/// Field 1/e half-width B of a transform-limited Gaussian pulse with intensity
/// FWHM t_fwhm: B = sqrt(ln 2) / (pi T).
double pulse_bandwidth(double t_fwhm_ps);

/// FWHM of the power spectrum exp[-(nu-c)^2/B^2], i.e. 2 B sqrt(ln 2).
double power_fwhm(double bandwidth_thz);

/// Inverse of power_fwhm.
double bandwidth_from_power_fwhm(double fwhm_thz);

/// Spectral phase of the y arm relative to x: 2 pi (nu - nu0) tau + delta.
/// The constant 2 pi nu0 tau is taken up by delta (the compensator sets the
/// total static phase).
double relative_phase(double nu_thz, double nu0_thz, double tau_ps, double delta_rad) noexcept;

PolarizedFieldSpectrum jones_field(const SetupParams& p, const FrequencyGrid& g);

/// Builds the recombined field from measured per-arm power spectra: each arm's
/// envelope is sqrt(power), the 1/sqrt(2) of the +45 degree pre-selection is
/// applied, and the y arm carries relative_phase().
PolarizedFieldSpectrum field_from_reflections(const Spectrum& x_power, const Spectrum& y_power, double nu0_thz,
                                              double tau_ps, double delta_rad, double amplitude = 1.0);

/// |cos(beta) ex + sin(beta) ey|^2 at every node.
Spectrum post_select(const PolarizedFieldSpectrum& f, double beta_rad);

/// Closed-form post-selected power spectrum:
///   S0/2 { cos^2 b G(nu-nu0-nu1) + sin^2 b G(nu-nu0-nu2)
///          + 2 cos b sin b gamma G(nu-nu0-nu+) cos(phase) },  G(x) = exp(-x^2/B^2).
/// Identical to post_select(jones_field(p, g), p.beta_rad).
Spectrum output_spectrum_analytic(const SetupParams& p, const FrequencyGrid& g);

/// Spectral overlap of the two envelopes, exp(-nu_minus^2 / B^2), in (0, 1].
double overlap_gamma(double nu_minus_thz, double bandwidth_thz);

inline constexpr double kSingularDenominator = 1e-12;

/// A = cos 2b / (1 + gamma sin 2b cos delta). Throws SingularPostSelection when
/// |denominator| <= 1e-12.
double amplification_factor(double beta_rad, double gamma, double delta_rad);

struct AmplificationPeak {
  double a_max;               // 1 / sqrt(1 - g^2), g = gamma cos delta
  double beta_star_rad;       // -asin(g)/2, where A = +a_max
  double beta_conjugate_rad;  // mirrored stationary point in (-pi/2, pi/2], where A = -a_max
};

/// Extremes of A over beta. Throws UnboundedAmplification if |gamma cos delta| >= 1.
AmplificationPeak max_amplification(double gamma, double delta_rad);

struct CentroidPrediction {
  double centroid_thz;  // nu0 + nu+ + A nu-
  double a;
  bool weak_regime;     // |nu-| <= 0.1 B and |tau| <= 0.01 / B
};

/// Linear-response centroid of the post-selected spectrum.
CentroidPrediction analytic_centroid(const SetupParams& p);

}  // namespace wva
