#pragma once

// End-to-end simulation of the two-grating polarization interferometer:
// reflections -> recombined field -> post-selection -> OSA -> side-lobe
// filter -> centroid, referenced to the beta = -90 degree measurement.

#include <cstdint>
#include <optional>

#include "wva/fbg.hpp"
#include "wva/osa.hpp"
#include "wva/spectral.hpp"

namespace wva {

struct SourceParams {
  double nu0_thz;        // carrier
  double bandwidth_thz;  // field 1/e half-width (see pulse_bandwidth)
  double amplitude = 1.0;
};

struct FilterSettings {
  bool enabled = true;
  int order = 4;
  double half_width_factor = 1.5;  // multiples of the grating bandwidth B
};

struct Scenario {
  SourceParams source;
  FbgParams fbg1;  // variable temperature t1, x polarization
  FbgParams fbg2;  // held at t2, y polarization
  double t1_c = 25.0;
  double t2_c = 25.0;
  double tau_ps = 0.0;
  double phi_rad = 0.0;
  double lcvr_rad = 0.0;
  double beta_rad = 0.0;
  FilterSettings filter;
  std::optional<OsaParams> osa;
  FrequencyGrid grid;
  UnitContext units;

  double delta_rad() const noexcept { return phi_rad - lcvr_rad; }
  double grating_bandwidth_thz() const noexcept { return 0.5 * (fbg1.bandwidth_thz + fbg2.bandwidth_thz); }

  /// Throws InvalidArgument on invalid parameters, including gratings at
  /// least as wide as the source.
  void validate() const;
};

/// Grid centered at `center_thz` spanning ten reflected-power FWHMs of the
/// grating, 4001 nodes.
FrequencyGrid default_grid(double center_thz, double grating_bandwidth_thz);

struct InterrogationResult {
  Spectrum raw;               // post-selected spectrum (after the OSA model, if any)
  Spectrum filtered;          // after the side-lobe filter
  double centroid_thz;
  double centroid_nm_shift;   // relative to the reference, positive = longer wavelength
  double reference_nm;        // wavelength of the beta = -90 degree reference centroid
  double a_effective;         // amplification_factor(beta, gamma, delta)
};

/// Evaluates a scenario at arbitrary (t1, beta) points. The beta = -90 degree
/// reference centroid is computed once on construction and shared by every
/// evaluation; instances are immutable and safe to share between threads.
class Interrogator {
 public:
  explicit Interrogator(Scenario scenario);

  const Scenario& scenario() const noexcept { return scenario_; }
  double reference_centroid_thz() const noexcept { return reference_thz_; }

  /// Post-selected spectrum before the OSA model.
  Spectrum post_selected(double t1_c, double beta_rad) const;

  /// Post-selected spectrum through the OSA model (if configured); `stream`
  /// selects an independent noise sub-stream of the OSA seed.
  Spectrum measured(double t1_c, double beta_rad, std::uint64_t stream) const;

  /// Super-Gaussian filter centred on main_lobe_center(), if enabled.
  Spectrum filtered(const Spectrum& measured) const;

  /// gamma from the gratings' half separation at t1.
  double gamma(double t1_c) const;
  double a_effective(double t1_c, double beta_rad) const;

  InterrogationResult run(double t1_c, double beta_rad, std::uint64_t stream = 0) const;

  /// Noise stream reserved for the reference measurement.
  static constexpr std::uint64_t kReferenceStream = ~std::uint64_t{0};

 private:
  Scenario scenario_;
  double reference_thz_ = 0.0;
};

/// One evaluation at the scenario's own t1 and beta.
InterrogationResult simulate_interrogation(const Scenario& sc);

}  // namespace wva
