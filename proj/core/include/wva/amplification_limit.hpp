#pragma once

// SNR-limited search for the largest usable amplification factor: strong
// amplification needs near-orthogonal post-selection, which attenuates the
// transmitted signal toward the OSA noise floor.

#include <vector>

#include "wva/interrogation.hpp"

namespace wva {

struct BetaSweep {
  double min_deg = -89.0;
  double max_deg = 0.0;
  double step_deg = 0.05;

  /// min, min+step, ... up to max (inclusive within step/1e6). Throws
  /// InvalidArgument when step <= 0 or max < min.
  std::vector<double> angles_deg() const;
};

struct UsablePoint {
  double beta_rad;
  double a;       // amplification_factor at this angle
  double snr_db;  // of the filtered OSA trace
};

/// Evaluates |A| and SNR at every sweep angle. Angles where the post-selection
/// is singular or the trace carries no signal are skipped. Sweep index i uses
/// OSA noise sub-stream i.
std::vector<UsablePoint> sweep_usable_amplification(const Scenario& sc, const BetaSweep& sweep = {});

/// Point of largest |A| with snr_db >= snr_min_db; ties (1e-9 relative) go to
/// positive A, then to the angle closer to zero. Throws DetectionLimited when
/// no point qualifies.
UsablePoint select_max_usable(const std::vector<UsablePoint>& points, double snr_min_db);

/// sweep + select. The scenario must carry OSA parameters.
UsablePoint max_usable_amplification(const Scenario& sc, double snr_min_db, const BetaSweep& sweep = {});

}  // namespace wva
