#pragma once

// Optical spectrum analyzer measurement model.
//
// A trace is the input spectrum convolved with a Gaussian instrument response
// (FWHM = resolution bandwidth), plus zero-mean Gaussian noise with variance
// noise_floor^2 + (rel_noise * sample)^2, clamped at zero.
//
// Noise is drawn from std::mt19937_64 (whose output sequence is fixed by the
// C++ standard) through a Box-Muller transform on 53-bit uniforms, so traces
// are reproducible on every conforming implementation.

#include <cstdint>
#include <random>

#include "wva/spectral.hpp"

namespace wva {

struct OsaParams {
  double rbw_nm = 0.01;      // Gaussian response FWHM
  double noise_floor = 0.0;  // additive noise standard deviation (spectrum units)
  double rel_noise = 0.0;    // multiplicative noise fraction, in [0, 1)
  std::uint64_t seed = 0;

  void validate() const;
  bool noiseless() const noexcept { return noise_floor == 0.0 && rel_noise == 0.0; }
};

struct SnrReport {
  double peak_signal;
  double noise_sigma;
  double snr_db;  // +inf when noise_sigma == 0

  bool infinite() const noexcept;
};

/// Independent sub-stream seed for sweep point `stream` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Standard normal deviates from a seeded mt19937_64.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform_open();  // (0, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Discrete Gaussian kernel of the given FWHM sampled at the grid spacing,
/// truncated at +-8 sigma and normalised to unit sum. A single tap when the
/// response is narrower than the grid resolution.
std::vector<double> instrument_kernel(double fwhm_thz, double spacing_thz);

Spectrum osa_trace(const Spectrum& s, const OsaParams& p, const UnitContext& units = {});

/// peak_signal = max sample of the trace; noise_sigma combines the floor and
/// the relative term at the peak in quadrature.
SnrReport snr_estimate(const Spectrum& trace, const OsaParams& p);

}  // namespace wva
