#include "wva/osa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wva/error.hpp"

namespace wva {

void OsaParams::validate() const {
  if (!(rbw_nm >= 0.0) || !std::isfinite(rbw_nm)) throw InvalidArgument("osa: rbw must be >= 0");
  if (!(noise_floor >= 0.0) || !std::isfinite(noise_floor)) throw InvalidArgument("osa: noise floor must be >= 0");
  if (!(rel_noise >= 0.0 && rel_noise < 1.0)) throw InvalidArgument("osa: relative noise must lie in [0, 1)");
}

bool SnrReport::infinite() const noexcept { return std::isinf(snr_db) && snr_db > 0; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double GaussianStream::uniform_open() {
  // 53 random bits -> (0, 1), never 0 so the log below is finite.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::vector<double> instrument_kernel(double fwhm_thz, double spacing_thz) {
  const double sigma = fwhm_thz / (2.0 * std::sqrt(2.0 * std::numbers::ln2));
  const auto half = static_cast<std::size_t>(std::ceil(8.0 * sigma / spacing_thz));
  if (!(sigma > 0.0) || half == 0) return {1.0};
  std::vector<double> k(2 * half + 1);
  double sum = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    const double x = (static_cast<double>(j) - static_cast<double>(half)) * spacing_thz / sigma;
    k[j] = std::exp(-0.5 * x * x);
    sum += k[j];
  }
  for (double& w : k) w /= sum;
  return k;
}

Spectrum osa_trace(const Spectrum& s, const OsaParams& p, const UnitContext& units) {
  p.validate();
  const FrequencyGrid& g = s.grid();
  const std::size_t n = s.size();

  std::vector<double> out(s.samples().begin(), s.samples().end());
  if (p.rbw_nm > 0.0) {
    const auto kernel = instrument_kernel(units.width_nm_to_thz(p.rbw_nm), g.spacing());
    if (kernel.size() > 1) {
      const auto half = static_cast<std::ptrdiff_t>(kernel.size() / 2);
      const auto size = static_cast<std::ptrdiff_t>(n);
      for (std::ptrdiff_t i = 0; i < size; ++i) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - half);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(size - 1, i + half);
        double acc = 0.0;
        for (std::ptrdiff_t j = lo; j <= hi; ++j) acc += kernel[static_cast<std::size_t>(i - j + half)] * s[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
      }
    }
  }

  if (!p.noiseless()) {
    GaussianStream noise(p.seed);
    for (double& v : out) {
      const double rel = p.rel_noise * v;
      const double sigma = std::sqrt(p.noise_floor * p.noise_floor + rel * rel);
      v = std::max(0.0, v + sigma * noise.next());
    }
  }
  return Spectrum(g, std::move(out));
}

SnrReport snr_estimate(const Spectrum& trace, const OsaParams& p) {
  p.validate();
  const double peak = trace[peak_index(trace)];
  const double rel = p.rel_noise * peak;
  const double sigma = std::sqrt(p.noise_floor * p.noise_floor + rel * rel);
  if (sigma == 0.0) return {peak, 0.0, std::numeric_limits<double>::infinity()};
  return {peak, sigma, 10.0 * std::log10(peak / sigma)};
}

}  // namespace wva
