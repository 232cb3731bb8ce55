#pragma once

// Scenario configuration file (JSON). Values are kept in the units written in
// the file (nm, ps, degC, rad, deg) so a resolved configuration serializes
// back to exactly the same numbers; build_scenario() converts to the internal
// THz representation.
//
// {
//   "units":          { "reference_wavelength_nm" },
//   "grid":           { "center_nm", "span_nm", "n_points" },                  optional
//   "source":         { "center_nm", "pulse_fwhm_ps", "amplitude" },
//   "fbg1" / "fbg2":  { "center_nm", "kappa_nm_per_c", "fwhm_nm", "reflect_efficiency",
//                       "side_lobe": { "offset_nm", "rel_amplitude", "fwhm_nm" } },
//   "interferometer": { "tau_ps", "phi_rad", "lcvr_rad" },
//   "postselect":     { "beta_deg", "beta_min_deg", "beta_max_deg", "beta_step_deg" },
//   "temperatures":   { "t2_ref_c", "t1_c": [...] },
//   "filter":         { "enabled", "order", "half_width_factor" },
//   "osa":            { "rbw_nm", "noise_floor", "rel_noise", "seed" }       optional
// }
//
// Every key is optional; unknown keys are rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wva/amplification_limit.hpp"
#include "wva/interrogation.hpp"

namespace wva {

struct SideLobeSpec {
  double offset_nm = -3.0;
  double rel_amplitude = 0.2;
  std::optional<double> fwhm_nm;  // defaults to the main-lobe FWHM
};

struct FbgSpec {
  double center_nm = 1551.0;
  double kappa_nm_per_c = 0.009;
  double fwhm_nm = 2.0;
  double reflect_efficiency = 0.14;
  std::optional<SideLobeSpec> side_lobe;
};

struct GridSpec {
  double center_nm;
  double span_nm;
  std::size_t n_points = 4001;
};

struct ScenarioSpec {
  double reference_wavelength_nm = kDefaultReferenceWavelengthNm;
  std::optional<GridSpec> grid;

  double source_center_nm = 1549.0;
  double source_pulse_fwhm_ps = 0.32;
  double source_amplitude = 1.0;

  FbgSpec fbg1;
  FbgSpec fbg2;

  double tau_ps = 0.0;
  double phi_rad = 0.0;
  double lcvr_rad = 0.0;

  std::optional<double> beta_deg;
  std::optional<BetaSweep> beta_sweep;

  double t2_ref_c = 25.0;
  std::vector<double> t1_c;  // empty: t1 = t2

  FilterSettings filter;
  std::optional<OsaParams> osa;

  /// Temperature differences t1 - t2 of the configured t1 list ({0} if empty).
  std::vector<double> dt_list_c() const;
};

/// Throws ConfigError (with the offending field path) or ParseError.
ScenarioSpec parse_scenario_spec(std::string_view json_text);
ScenarioSpec load_scenario_spec(const std::filesystem::path& path);

/// Fully resolved JSON (every default explicit), pretty-printed.
std::string to_json(const ScenarioSpec& spec);

/// Scenario at temperature t1 and post-selection angle beta; validates.
Scenario build_scenario(const ScenarioSpec& spec, double t1_c, double beta_rad);

/// Scenario at the first configured t1 and the configured beta (0 if unset).
Scenario build_scenario(const ScenarioSpec& spec);

}  // namespace wva
