#include "wva/interrogation.hpp"

#include <cmath>
#include <numbers>

#include "wva/error.hpp"
#include "wva/optics.hpp"

namespace wva {

void Scenario::validate() const {
  units.validate();
  fbg1.validate();
  fbg2.validate();
  if (!(source.nu0_thz > 0.0) || !(source.bandwidth_thz > 0.0)) {
    throw InvalidArgument("scenario: source carrier and bandwidth must be positive");
  }
  if (!(fbg1.bandwidth_thz < source.bandwidth_thz) || !(fbg2.bandwidth_thz < source.bandwidth_thz)) {
    throw InvalidArgument("scenario: grating bandwidth must be narrower than the source bandwidth");
  }
  for (double v : {t1_c, t2_c, tau_ps, phi_rad, lcvr_rad, beta_rad, source.amplitude}) {
    if (!std::isfinite(v)) throw InvalidArgument("scenario: parameters must be finite");
  }
  if (std::abs(beta_rad) > std::numbers::pi / 2 + 1e-12) throw InvalidArgument("scenario: beta outside [-90, 90] deg");
  if (filter.enabled && (filter.order <= 0 || filter.order % 2 != 0 || !(filter.half_width_factor > 0.0))) {
    throw InvalidArgument("scenario: filter needs a positive even order and a positive width");
  }
  if (osa) osa->validate();
}

FrequencyGrid default_grid(double center_thz, double grating_bandwidth_thz) {
  return FrequencyGrid(center_thz, 10.0 * power_fwhm(grating_bandwidth_thz), 4001);
}

Interrogator::Interrogator(Scenario scenario) : scenario_(std::move(scenario)) {
  scenario_.validate();
  const Spectrum ref = filtered(measured(scenario_.t2_c, -std::numbers::pi / 2, kReferenceStream));
  reference_thz_ = centroid(ref);
}

Spectrum Interrogator::post_selected(double t1_c, double beta_rad) const {
  const Scenario& sc = scenario_;
  const double c1 = bragg_center(sc.fbg1, t1_c, sc.t2_c, sc.units);
  const double c2 = bragg_center(sc.fbg2, sc.t2_c, sc.t2_c, sc.units);
  const Spectrum r1 = reflect(sc.fbg1, sc.source.bandwidth_thz, sc.source.nu0_thz, c1, sc.grid);
  const Spectrum r2 = reflect(sc.fbg2, sc.source.bandwidth_thz, sc.source.nu0_thz, c2, sc.grid);
  const auto field = field_from_reflections(r1, r2, sc.source.nu0_thz, sc.tau_ps, sc.delta_rad(), sc.source.amplitude);
  return post_select(field, beta_rad);
}

Spectrum Interrogator::measured(double t1_c, double beta_rad, std::uint64_t stream) const {
  Spectrum s = post_selected(t1_c, beta_rad);
  if (!scenario_.osa) return s;
  OsaParams p = *scenario_.osa;
  p.seed = derive_seed(p.seed, stream);
  return osa_trace(s, p, scenario_.units);
}

Spectrum Interrogator::filtered(const Spectrum& measured) const {
  const FilterSettings& f = scenario_.filter;
  if (!f.enabled) return measured;
  const double hw = f.half_width_factor * scenario_.grating_bandwidth_thz();
  return super_gaussian_filter(measured, main_lobe_center(measured), hw, f.order);
}

double Interrogator::gamma(double t1_c) const {
  const Scenario& sc = scenario_;
  const double c1 = bragg_center(sc.fbg1, t1_c, sc.t2_c, sc.units);
  const double c2 = sc.fbg2.center_ref_thz;
  return overlap_gamma(0.5 * (c1 - c2), sc.grating_bandwidth_thz());
}

double Interrogator::a_effective(double t1_c, double beta_rad) const {
  return amplification_factor(beta_rad, gamma(t1_c), scenario_.delta_rad());
}

InterrogationResult Interrogator::run(double t1_c, double beta_rad, std::uint64_t stream) const {
  const double a = a_effective(t1_c, beta_rad);
  Spectrum raw = measured(t1_c, beta_rad, stream);
  Spectrum filt = filtered(raw);
  const double nu = centroid(filt);
  const UnitContext& u = scenario_.units;
  return {std::move(raw),
          std::move(filt),
          nu,
          u.shift_thz_to_nm(nu - reference_thz_),
          frequency_to_wavelength(reference_thz_),
          a};
}

InterrogationResult simulate_interrogation(const Scenario& sc) {
  return Interrogator(sc).run(sc.t1_c, sc.beta_rad);
}

}  // namespace wva
