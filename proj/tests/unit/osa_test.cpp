#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wva/amplification_limit.hpp"
#include "wva/error.hpp"
#include "wva/optics.hpp"
#include "wva/osa.hpp"
#include "wva/scenario_config.hpp"

namespace wva {
namespace {

using testing::deg;
using testing::reference_setup_spec;

Spectrum gaussian(const FrequencyGrid& g, double center, double width, double amp = 1.0) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = amp * std::exp(-std::pow((g.node(i) - center) / width, 2));
  return Spectrum(g, std::move(v));
}

TEST(Osa, NoResolutionNoNoiseIsIdentity) {
  const auto g = make_grid(193.0, 2.0, 801);
  const auto s = gaussian(g, 193.1, 0.2);
  const auto t = osa_trace(s, OsaParams{0.0, 0.0, 0.0, 1});
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(t[i], s[i]);
}

TEST(Osa, NarrowResolutionIsIdentity) {
  const auto g = make_grid(193.0, 2.0, 11);
  const auto s = gaussian(g, 193.0, 0.5);
  const auto t = osa_trace(s, OsaParams{0.001, 0.0, 0.0, 1});
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(t[i], s[i]);
}

TEST(Osa, KernelIsNormalisedAndSymmetric) {
  const auto k = instrument_kernel(0.05, 0.001);
  double sum = 0.0;
  for (double w : k) sum += w;
  EXPECT_NEAR(sum, 1.0, 1e-14);
  for (std::size_t j = 0; j < k.size() / 2; ++j) EXPECT_DOUBLE_EQ(k[j], k[k.size() - 1 - j]);
}

TEST(Osa, ConvolutionConservesPowerAndSymmetricCentroid) {
  const auto g = make_grid(193.0, 4.0, 4001);
  const auto s = gaussian(g, 193.05, 0.2);
  const auto t = osa_trace(s, OsaParams{0.5, 0.0, 0.0, 1});
  EXPECT_NEAR(total_power(t), total_power(s), 1e-9 * total_power(s));
  EXPECT_NEAR(centroid(t), centroid(s), 1e-9);
  // Broadened: Gaussian widths add in quadrature.
  EXPECT_LT(t[peak_index(t)], s[peak_index(s)]);
}

TEST(Osa, SeededNoiseIsReproducible) {
  const auto g = make_grid(193.0, 2.0, 1001);
  const auto s = gaussian(g, 193.0, 5.0);  // nearly flat, so no sample is clamped
  const OsaParams p{0.01, 1e-3, 0.01, 1234};
  const auto a = osa_trace(s, p);
  const auto b = osa_trace(s, p);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(a[i], b[i]);

  OsaParams q = p;
  q.seed = 1235;
  const auto c = osa_trace(s, q);
  std::size_t differ = 0;
  for (std::size_t i = 0; i < s.size(); ++i) differ += a[i] != c[i] ? 1 : 0;
  EXPECT_GE(differ, 99 * s.size() / 100);
}

TEST(Osa, NoiseStatistics) {
  GaussianStream n(7);
  double sum = 0.0;
  double sq = 0.0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) {
    const double x = n.next();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / count, 0.0, 0.01);
  EXPECT_NEAR(sq / count, 1.0, 0.01);
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Osa, TraceIsNonNegative) {
  const auto g = make_grid(193.0, 2.0, 1001);
  const auto t = osa_trace(Spectrum::zeros(g), OsaParams{0.01, 1.0, 0.0, 5});
  for (double v : t.samples()) EXPECT_GE(v, 0.0);
}

TEST(Osa, Validation) {
  EXPECT_THROW((OsaParams{-1.0, 0.0, 0.0, 0}.validate()), InvalidArgument);
  EXPECT_THROW((OsaParams{0.01, -1.0, 0.0, 0}.validate()), InvalidArgument);
  EXPECT_THROW((OsaParams{0.01, 0.0, 1.0, 0}.validate()), InvalidArgument);
}

TEST(Snr, KnownValues) {
  const auto g = make_grid(193.0, 2.0, 401);
  const OsaParams p{0.0, 0.01, 0.0, 0};
  const auto r = snr_estimate(gaussian(g, 193.0, 0.3, 1.0), p);
  EXPECT_NEAR(r.snr_db, 20.0, 1e-12);
  const auto r2 = snr_estimate(gaussian(g, 193.0, 0.3, 2.0), p);
  EXPECT_NEAR(r2.snr_db - r.snr_db, 10.0 * std::log10(2.0), 1e-12);
  EXPECT_TRUE(snr_estimate(gaussian(g, 193.0, 0.3), OsaParams{}).infinite());
  // Pure relative noise: SNR independent of signal level.
  const OsaParams rel{0.0, 0.0, 0.1, 0};
  EXPECT_NEAR(snr_estimate(gaussian(g, 193.0, 0.3, 5.0), rel).snr_db, 10.0, 1e-12);
}

TEST(Snr, DropTracksPostSelectionAttenuation) {
  ScenarioSpec spec = reference_setup_spec();
  spec.source_center_nm = 1551.0;
  spec.osa = OsaParams{0.01, 1e-8, 0.0, 9};
  const Scenario sc = build_scenario(spec);
  const Interrogator probe(sc);
  const auto snr_at = [&](double beta_deg) {
    return snr_estimate(probe.filtered(probe.measured(sc.t1_c, deg(beta_deg), 0)), *sc.osa).snr_db;
  };
  const double drop = snr_at(0.0) - snr_at(-44.0);
  const double g = 0.99;
  const double b = deg(-44.0);
  const double attenuation = 1.0 + g * std::sin(2 * b);  // peak power ratio for matched gratings
  EXPECT_NEAR(drop, -10.0 * std::log10(attenuation), 0.1);
}

TEST(MaxUsable, NoiselessMatchesClosedForm) {
  ScenarioSpec spec = reference_setup_spec();
  spec.osa = OsaParams{0.01, 0.0, 0.0, 1};
  const Scenario sc = build_scenario(spec);
  const auto best = max_usable_amplification(sc, 40.0);
  const auto closed = max_amplification(1.0, spec.phi_rad);
  EXPECT_NEAR(best.beta_rad, closed.beta_star_rad, deg(0.05));
  EXPECT_NEAR(best.a, closed.a_max, 0.01);
  EXPECT_GT(best.a, 0.0);
}

TEST(MaxUsable, MonotoneInFloorAndThreshold) {
  ScenarioSpec spec = reference_setup_spec();
  spec.source_center_nm = 1551.0;
  const BetaSweep sweep{-89.0, 0.0, 0.25};
  const std::vector<double> floors{1e-5, 1e-4, 1e-3, 3e-3, 1e-2};
  const std::vector<double> thresholds{5.0, 10.0, 15.0, 20.0, 25.0};
  std::vector<std::vector<double>> amax(floors.size(), std::vector<double>(thresholds.size(), 0.0));
  for (std::size_t i = 0; i < floors.size(); ++i) {
    spec.osa = OsaParams{0.01, floors[i], 0.0, 11};
    const auto points = sweep_usable_amplification(build_scenario(spec), sweep);
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      try {
        amax[i][j] = std::abs(select_max_usable(points, thresholds[j]).a);
      } catch (const DetectionLimited&) {
        amax[i][j] = 0.0;
      }
    }
  }
  for (std::size_t i = 0; i < floors.size(); ++i) {
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      if (i > 0) EXPECT_LE(amax[i][j], amax[i - 1][j]) << i << "," << j;
      if (j > 0) EXPECT_LE(amax[i][j], amax[i][j - 1]) << i << "," << j;
    }
  }
  EXPECT_GT(amax.front().front(), amax.back().back());
}

TEST(MaxUsable, DetectionLimited) {
  ScenarioSpec spec = reference_setup_spec();
  spec.osa = OsaParams{0.01, 10.0, 0.0, 2};
  EXPECT_THROW(max_usable_amplification(build_scenario(spec), 30.0, BetaSweep{-89.0, 0.0, 1.0}), DetectionLimited);
}

TEST(MaxUsable, TieBreakPrefersPositiveThenSmallerAngle) {
  const std::vector<UsablePoint> pts{{deg(-60), -5.0, 30}, {deg(-30), 5.0, 30}, {deg(-20), 5.0, 30}, {deg(-5), 2.0, 50}};
  const auto best = select_max_usable(pts, 20.0);
  EXPECT_DOUBLE_EQ(best.beta_rad, deg(-20));
  EXPECT_DOUBLE_EQ(select_max_usable(pts, 40.0).a, 2.0);
  EXPECT_THROW(select_max_usable(pts, 60.0), DetectionLimited);
}

TEST(BetaSweep, Angles) {
  const auto a = BetaSweep{-89.0, 0.0, 0.05}.angles_deg();
  EXPECT_EQ(a.size(), 1781u);
  EXPECT_NEAR(a.back(), 0.0, 1e-9);
  EXPECT_THROW((BetaSweep{0.0, -1.0, 0.1}.angles_deg()), InvalidArgument);
  EXPECT_THROW((BetaSweep{-1.0, 0.0, 0.0}.angles_deg()), InvalidArgument);
}

}  // namespace
}  // namespace wva
