#pragma once

// Fiber Bragg grating response: thermal shift of the Bragg frequency, the
// reflected power spectrum, the referenced centroid-shift law and the
// sensitivity calibration fit.

#include <optional>
#include <span>

#include "wva/spectral.hpp"

namespace wva {

/// Satellite reflection lobe, modelled as a Gaussian added to the main lobe's power.
struct SideLobe {
  double offset_thz;     // from the main-lobe center
  double rel_amplitude;  // peak power relative to the main lobe, [0, 1)
  double width_thz;      // power 1/e half-width
};

struct FbgParams {
  double center_ref_thz;           // Bragg frequency at the reference temperature
  double kappa_nm_per_c;           // thermal sensitivity (positive: red shift when heated)
  double bandwidth_thz;            // power 1/e half-width of the main lobe (B)
  double reflect_efficiency = 1.0;  // (0, 1]
  std::optional<SideLobe> side_lobe;

  void validate() const;

  /// kappa in frequency units; negative for a positive nm/degC sensitivity.
  double kappa_thz_per_c(const UnitContext& units = {}) const;
};

/// Bragg frequency at temperature t: center_ref + kappa (t - t_ref).
double bragg_center(const FbgParams& f, double t_c, double t_ref_c, const UnitContext& units = {});

/// Reflected power spectrum for a main lobe at `center_thz`:
///   eff * Src(center) * [ exp(-(nu-center)^2/B^2) + a_side exp(-(nu-center-offset)^2/w^2) ]
/// where Src(nu) = exp(-(nu-source_nu0)^2/source_B^2) is the source power envelope.
/// Throws InvalidArgument if center is outside the grid.
Spectrum reflect(const FbgParams& f, double source_bandwidth_thz, double source_nu0_thz, double center_thz,
                 const FrequencyGrid& g);

/// Referenced centroid shift, in nm:
///   (kappa/2)(A+1) dt + (A+1) static_offset / 2
/// where static_offset is the reference-temperature mismatch between the gratings.
double centroid_shift_model(double dt_c, double kappa_nm_per_c, double a, double static_offset_nm);

struct CalibrationPoint {
  double dt_c;
  double shift_nm;
};

struct CalibrationResult {
  double slope_nm_per_c;
  double intercept_nm;
  double residual_rms_nm;  // sqrt(mean squared residual)
  std::size_t n_points;
};

/// Ordinary least-squares line through the points. Throws DegenerateFit when
/// fewer than two distinct dt values are present.
CalibrationResult fit_sensitivity(std::span<const CalibrationPoint> points);

}  // namespace wva
