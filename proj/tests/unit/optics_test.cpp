#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wva/error.hpp"
#include "wva/optics.hpp"

namespace wva {
namespace {

using std::numbers::pi;
using testing::deg;

constexpr double kNu0 = 193.29;
constexpr double kB = 0.15;

FrequencyGrid grid_for(double b = kB) { return make_grid(kNu0, 16.0 * b, 4001); }

SetupParams base_params() {
  SetupParams p;
  p.nu0_thz = kNu0;
  p.bandwidth_thz = kB;
  return p;
}

TEST(PulseBandwidth, SourceOf320fs) {
  const double b = pulse_bandwidth(0.320);
  EXPECT_NEAR(b, 0.8283, 5e-4);
  EXPECT_NEAR(power_fwhm(b), 1.379, 1e-3);
  const UnitContext at1549{1549.0};
  EXPECT_NEAR(at1549.width_thz_to_nm(power_fwhm(b)), 11.0, 0.05);
}

TEST(PulseBandwidth, ScalingAndErrors) {
  EXPECT_NEAR(pulse_bandwidth(1.0), std::sqrt(std::log(2.0)) / pi, 1e-15);
  EXPECT_NEAR(pulse_bandwidth(1.0), 0.2650, 1e-4);
  EXPECT_NEAR(pulse_bandwidth(2.0), 0.5 * pulse_bandwidth(1.0), 1e-15);
  EXPECT_THROW(pulse_bandwidth(0.0), InvalidArgument);
  EXPECT_THROW(pulse_bandwidth(-1.0), InvalidArgument);
}

TEST(JonesField, IdenticalArmsWhenUnshiftedAndInPhase) {
  const auto f = jones_field(base_params(), grid_for());
  for (std::size_t i = 0; i < f.ex.size(); ++i) EXPECT_EQ(f.ex[i], f.ey[i]);
}

TEST(JonesField, EnvelopePeaks) {
  auto p = base_params();
  p.nu1_thz = 0.2;
  p.nu2_thz = -0.1;
  p.tau_ps = 0.3;
  p.phi_rad = 1.0;
  const auto g = grid_for();
  const auto f = jones_field(p, g);
  std::size_t ix = 0, iy = 0;
  for (std::size_t i = 0; i < f.ex.size(); ++i) {
    if (std::abs(f.ex[i]) > std::abs(f.ex[ix])) ix = i;
    if (std::abs(f.ey[i]) > std::abs(f.ey[iy])) iy = i;
  }
  EXPECT_NEAR(g.node(ix), kNu0 + 0.2, g.spacing() / 2);
  EXPECT_NEAR(g.node(iy), kNu0 - 0.1, g.spacing() / 2);
}

TEST(JonesField, IntensityAtCarrier) {
  auto p = base_params();
  p.amplitude = 1.7;
  p.nu1_thz = kB / 10;
  p.nu2_thz = -kB / 10;
  const auto g = grid_for();
  const auto f = jones_field(p, g);
  const std::size_t mid = g.size() / 2;
  ASSERT_NEAR(g.node(mid), kNu0, 1e-12);
  EXPECT_NEAR(std::norm(f.ex[mid]) + std::norm(f.ey[mid]), 1.7 * 1.7 * std::exp(-0.01), 1e-13);
}

TEST(PostSelect, Projectors) {
  auto p = base_params();
  p.nu1_thz = 0.05;
  p.nu2_thz = -0.03;
  p.phi_rad = 0.4;
  const auto g = grid_for();
  const auto f = jones_field(p, g);
  const auto x = post_select(f, 0.0);
  const auto y = post_select(f, -pi / 2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(x[i], std::norm(f.ex[i]), 1e-15);
    EXPECT_NEAR(y[i], std::norm(f.ey[i]), 1e-15);
  }
}

TEST(PostSelect, DarkPort) {
  const auto g = grid_for();
  const auto f = jones_field(base_params(), g);
  const double bright = total_power(post_select(f, 0.0));
  EXPECT_LE(total_power(post_select(f, -pi / 4)), 1e-10 * bright);
  const auto analytic = [&] {
    auto p = base_params();
    p.beta_rad = -pi / 4;
    return output_spectrum_analytic(p, g);
  }();
  EXPECT_LE(total_power(analytic), 1e-10 * bright);
}

TEST(OutputSpectrum, BetaZeroIsSingleGaussian) {
  auto p = base_params();
  p.nu1_thz = 0.04;
  p.nu2_thz = -0.02;
  p.phi_rad = 0.3;
  const auto g = grid_for();
  const auto s = output_spectrum_analytic(p, g);
  EXPECT_NEAR(centroid(s), kNu0 + 0.04, 1e-10);
  // Power FWHM 2 B sqrt(ln 2): the half-maximum level is reached at +-B sqrt(ln 2).
  const double peak = s[peak_index(s)];
  const double half_point = kNu0 + 0.04 + kB * std::sqrt(std::log(2.0));
  const double x = (half_point - kNu0 - 0.04) / kB;
  EXPECT_NEAR(0.5 * std::exp(-x * x), 0.25, 1e-14);
  EXPECT_NEAR(peak, 0.5, 1e-6);
}

TEST(OutputSpectrum, MatchesProjectionOracle) {
  auto p = base_params();
  p.beta_rad = -0.6;
  p.tau_ps = 0.05;
  p.phi_rad = 0.2;
  p.nu1_thz = 0.025 * kB;
  p.nu2_thz = -0.025 * kB;
  const auto g = grid_for();
  const auto analytic = output_spectrum_analytic(p, g);
  const auto oracle = post_select(jones_field(p, g), p.beta_rad);
  const double peak = oracle[peak_index(oracle)];
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(analytic[i], oracle[i], 1e-12 * peak + 1e-9 * std::max(analytic[i], oracle[i])) << i;
  }
}

TEST(Overlap, Values) {
  EXPECT_EQ(overlap_gamma(0.0, kB), 1.0);
  EXPECT_NEAR(overlap_gamma(kB, kB), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(overlap_gamma(kB, kB), 0.3679, 1e-4);
  EXPECT_NEAR(overlap_gamma(0.1 * kB, kB), 0.99005, 1e-5);
  EXPECT_THROW(overlap_gamma(0.1, 0.0), InvalidArgument);
}

TEST(Amplification, Endpoints) {
  for (double gamma : {0.1, 0.5, 0.99, 1.0}) {
    for (double delta : {0.0, 0.7, 2.0}) {
      EXPECT_NEAR(amplification_factor(0.0, gamma, delta), 1.0, 1e-15);
      EXPECT_NEAR(amplification_factor(-pi / 2, gamma, delta), -1.0, 1e-15);
      EXPECT_NEAR(amplification_factor(pi / 2, gamma, delta), -1.0, 1e-15);
    }
  }
}

TEST(Amplification, OptimumNearMinus41Degrees) {
  // gamma = 1, cos(delta) = 0.99
  EXPECT_NEAR(amplification_factor(deg(-40), 1.0, std::acos(0.99)), 6.934, 1e-3);
  EXPECT_NEAR(amplification_factor(deg(-40), 1.0, std::acos(0.99)), oracle::amplification(deg(-40), 0.99), 1e-12);
}

TEST(Amplification, PeriodPi) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double beta = -pi / 2 + pi / 2 * u(rng);
    const double gamma = 0.05 + 0.95 * u(rng);
    const double delta = pi * u(rng);
    const double a = amplification_factor(beta, gamma, delta);
    EXPECT_NEAR(amplification_factor(beta + pi, gamma, delta), a, 1e-9 * std::max(1.0, std::abs(a)));
    EXPECT_NEAR(amplification_factor(beta - pi, gamma, delta), a, 1e-9 * std::max(1.0, std::abs(a)));
  }
}

TEST(Amplification, SingularPostSelection) {
  EXPECT_THROW(amplification_factor(-pi / 4, 1.0, 0.0), SingularPostSelection);
  EXPECT_THROW(amplification_factor(0.0, 0.0, 0.0), InvalidArgument);
}

TEST(MaxAmplification, Values) {
  const auto zero = max_amplification(1.0, pi / 2);
  EXPECT_NEAR(zero.a_max, 1.0, 1e-15);
  EXPECT_NEAR(zero.beta_star_rad, 0.0, 1e-15);

  const auto p99 = max_amplification(1.0, std::acos(0.99));
  EXPECT_NEAR(p99.a_max, 7.0888, 1e-4);
  EXPECT_NEAR(p99.beta_star_rad * 180 / pi, -40.95, 0.01);
  EXPECT_NEAR(amplification_factor(p99.beta_star_rad, 1.0, std::acos(0.99)), p99.a_max, 1e-9);
  EXPECT_NEAR(amplification_factor(p99.beta_conjugate_rad, 1.0, std::acos(0.99)), -p99.a_max, 1e-9);

  const auto unity = max_amplification(1.0, 0.2);
  EXPECT_NEAR(unity.a_max, 1.0 / std::abs(std::sin(0.2)), 1e-12);
  EXPECT_NEAR(unity.a_max, 5.033, 1e-3);
  EXPECT_NEAR(unity.a_max, std::pow(1.0 - std::cos(0.2) * std::cos(0.2), -0.5), 1e-12);

  EXPECT_THROW(max_amplification(1.0, 0.0), UnboundedAmplification);
}

TEST(MaxAmplification, AgreesWithBruteForceSweep) {
  for (double g : {0.0, 0.5, 0.9, 0.99, 0.999, 0.9999}) {
    const auto closed = max_amplification(1.0, std::acos(g));
    const auto sweep = oracle::brute_force_peak(g);
    EXPECT_NEAR(sweep.a / closed.a_max, 1.0, 1e-6) << g;
    EXPECT_NEAR(sweep.beta_rad, closed.beta_star_rad, 2e-6 + 1e-3 * (1 - g)) << g;
  }
}

TEST(MaxAmplification, NegativeOverlapBranchStaysInRange) {
  const auto p = max_amplification(1.0, 2.5);  // g < 0
  EXPECT_GT(p.beta_star_rad, 0.0);
  EXPECT_GT(p.beta_conjugate_rad, -pi / 2);
  EXPECT_LE(p.beta_conjugate_rad, pi / 2);
  EXPECT_NEAR(amplification_factor(p.beta_conjugate_rad, 1.0, 2.5), -p.a_max, 1e-9);
}

TEST(AnalyticCentroid, Endpoints) {
  auto p = base_params();
  p.nu1_thz = 0.004;
  p.nu2_thz = -0.001;
  EXPECT_NEAR(analytic_centroid(p).centroid_thz, kNu0 + 0.004, 1e-14);
  p.beta_rad = -pi / 2;
  EXPECT_NEAR(analytic_centroid(p).centroid_thz, kNu0 - 0.001, 1e-14);
}

TEST(AnalyticCentroid, AmplifiedOffsetMatchesNumericCentroid) {
  auto p = base_params();
  p.beta_rad = deg(-40);
  p.nu1_thz = 0.01 * kB;
  p.nu2_thz = -0.01 * kB;
  // gamma cos(delta) = 0.99 exactly.
  p.phi_rad = std::acos(0.99 / overlap_gamma(0.01 * kB, kB));
  const auto pred = analytic_centroid(p);
  EXPECT_TRUE(pred.weak_regime);
  EXPECT_NEAR(pred.a, 6.934, 1e-3);
  EXPECT_NEAR(pred.centroid_thz - kNu0, 6.934 * 0.01 * kB, 1e-3 * 0.01 * kB);
  const double numeric = centroid(output_spectrum_analytic(p, grid_for()));
  EXPECT_NEAR(numeric - kNu0, pred.centroid_thz - kNu0, 0.01 * std::abs(pred.a * p.nu_minus_thz()));
}

TEST(AnalyticCentroid, WeakRegimeFlag) {
  auto p = base_params();
  p.nu1_thz = 0.3 * kB;
  EXPECT_FALSE(analytic_centroid(p).weak_regime);
  p.nu1_thz = 0.0;
  p.tau_ps = 0.02 / kB;
  EXPECT_FALSE(analytic_centroid(p).weak_regime);
  p.tau_ps = 0.005 / kB;
  EXPECT_TRUE(analytic_centroid(p).weak_regime);
}

TEST(AnalyticCentroid, ConsistentWithSpectrumAtSmallDelay) {
  // The closed-form centroid neglects the delay; at tau B = 1e-3 the residual is well inside 1%
  // of A nu- across the beta range.
  for (double beta_deg = -89.0; beta_deg <= 0.0; beta_deg += 4.0) {
    for (double ratio : {0.005, 0.02, 0.05}) {
      auto p = base_params();
      p.beta_rad = deg(beta_deg);
      p.nu1_thz = ratio * kB;
      p.nu2_thz = -ratio * kB;
      p.tau_ps = 1e-3 / kB;
      const auto pred = analytic_centroid(p);
      const double numeric = centroid(output_spectrum_analytic(p, grid_for()));
      EXPECT_NEAR(numeric, pred.centroid_thz, 0.01 * std::abs(pred.a * p.nu_minus_thz())) << beta_deg << " " << ratio;
    }
  }
}

TEST(Attenuation, TransmissionAtOptimumFallsAsOverlapGrows) {
  const auto g = grid_for();
  double previous = 2.0;
  for (double target : {0.5, 0.9, 0.99, 0.999, 0.9999}) {
    auto p = base_params();
    p.phi_rad = std::acos(target);
    const double reference = total_power(output_spectrum_analytic(p, g));
    p.beta_rad = max_amplification(1.0, p.phi_rad).beta_star_rad;
    const double ratio = total_power(output_spectrum_analytic(p, g)) / reference;
    EXPECT_LT(ratio, previous) << target;
    EXPECT_NEAR(ratio, 1.0 - target * target, 1e-9);
    previous = ratio;
  }
}

}  // namespace
}  // namespace wva
