#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "wva/wva.hpp"

namespace {

using namespace wva;

constexpr double kDeg = std::numbers::pi / 180.0;

Spectrum gaussian(std::size_t n) {
  const FrequencyGrid g(193.3, 2.0, n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (g.node(i) - 193.31) / 0.15;
    v[i] = std::exp(-x * x);
  }
  return Spectrum(g, std::move(v));
}

void BM_Centroid(benchmark::State& state) {
  const Spectrum s = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(centroid(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Centroid)->Arg(1001)->Arg(4001)->Arg(16001);

void BM_MainLobeCenter(benchmark::State& state) {
  const Spectrum s = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(main_lobe_center(s));
}
BENCHMARK(BM_MainLobeCenter)->Arg(4001);

void BM_AnalyticSpectrum(benchmark::State& state) {
  SetupParams p;
  p.beta_rad = -40 * kDeg;
  p.phi_rad = std::acos(0.99);
  p.nu1_thz = 0.01;
  p.nu2_thz = -0.01;
  const FrequencyGrid g(p.nu0_thz, 20 * p.bandwidth_thz, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(output_spectrum_analytic(p, g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AnalyticSpectrum)->Arg(4001);

void BM_JonesProjection(benchmark::State& state) {
  SetupParams p;
  p.beta_rad = -40 * kDeg;
  p.nu1_thz = 0.01;
  const FrequencyGrid g(p.nu0_thz, 20 * p.bandwidth_thz, 4001);
  for (auto _ : state) benchmark::DoNotOptimize(post_select(jones_field(p, g), p.beta_rad));
}
BENCHMARK(BM_JonesProjection);

void BM_OsaTrace(benchmark::State& state) {
  const Spectrum s = gaussian(4001);
  OsaParams p;
  p.rbw_nm = 0.01 * static_cast<double>(state.range(0));
  p.noise_floor = 1e-6;
  p.rel_noise = 1e-3;
  p.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(osa_trace(s, p));
}
BENCHMARK(BM_OsaTrace)->Arg(1)->Arg(10);

ScenarioSpec bench_spec(bool with_osa) {
  ScenarioSpec spec;
  if (with_osa) spec.osa = OsaParams{0.01, 1e-6, 1e-3, 2024};
  return spec;
}

void BM_InterrogatorRun(benchmark::State& state) {
  const ScenarioSpec spec = bench_spec(state.range(0) != 0);
  const Interrogator it(build_scenario(spec, spec.t2_ref_c + 5.0, -40 * kDeg));
  std::uint64_t stream = 0;
  for (auto _ : state) benchmark::DoNotOptimize(it.run(spec.t2_ref_c + 5.0, -40 * kDeg, stream++));
}
BENCHMARK(BM_InterrogatorRun)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_SimulateInterrogation(benchmark::State& state) {
  const ScenarioSpec spec = bench_spec(true);
  const Scenario sc = build_scenario(spec, spec.t2_ref_c + 5.0, -40 * kDeg);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_interrogation(sc));
}
BENCHMARK(BM_SimulateInterrogation)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
