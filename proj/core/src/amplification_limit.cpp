#include "wva/amplification_limit.hpp"

#include <cmath>
#include <numbers>

#include "wva/error.hpp"
#include "wva/text.hpp"

namespace wva {

std::vector<double> BetaSweep::angles_deg() const {
  if (!(step_deg > 0.0)) throw InvalidArgument("beta sweep: step must be positive");
  if (!(max_deg >= min_deg)) throw InvalidArgument("beta sweep: max must not be below min");
  const auto count = static_cast<std::size_t>(std::floor((max_deg - min_deg) / step_deg + 1e-6)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = min_deg + static_cast<double>(i) * step_deg;
  return out;
}

std::vector<UsablePoint> sweep_usable_amplification(const Scenario& sc, const BetaSweep& sweep) {
  if (!sc.osa) throw InvalidArgument("max usable amplification: scenario has no OSA parameters");
  const Interrogator probe(sc);
  const auto angles = sweep.angles_deg();
  std::vector<UsablePoint> out;
  out.reserve(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double beta = angles[i] * std::numbers::pi / 180.0;
    double a = 0.0;
    try {
      a = probe.a_effective(sc.t1_c, beta);
    } catch (const SingularPostSelection&) {
      continue;
    }
    const Spectrum trace = probe.filtered(probe.measured(sc.t1_c, beta, i));
    if (!(total_power(trace) > 0.0)) continue;
    out.push_back({beta, a, snr_estimate(trace, *sc.osa).snr_db});
  }
  return out;
}

UsablePoint select_max_usable(const std::vector<UsablePoint>& points, double snr_min_db) {
  const UsablePoint* best = nullptr;
  for (const auto& p : points) {
    if (!(p.snr_db >= snr_min_db)) continue;
    if (best == nullptr) {
      best = &p;
      continue;
    }
    const double mag = std::abs(p.a);
    const double best_mag = std::abs(best->a);
    const double tol = 1e-9 * std::max(mag, best_mag);
    if (mag > best_mag + tol) {
      best = &p;
    } else if (std::abs(mag - best_mag) <= tol) {
      const bool prefer_sign = p.a > 0.0 && best->a < 0.0;
      const bool same_sign = (p.a > 0.0) == (best->a > 0.0);
      if (prefer_sign || (same_sign && std::abs(p.beta_rad) < std::abs(best->beta_rad))) best = &p;
    }
  }
  if (best == nullptr) {
    throw DetectionLimited("no post-selection angle reaches the SNR floor of " + format_decimal(snr_min_db) + " dB");
  }
  return *best;
}

UsablePoint max_usable_amplification(const Scenario& sc, double snr_min_db, const BetaSweep& sweep) {
  if (!std::isfinite(snr_min_db)) throw InvalidArgument("max usable amplification: SNR floor must be finite");
  return select_max_usable(sweep_usable_amplification(sc, sweep), snr_min_db);
}

}  // namespace wva
