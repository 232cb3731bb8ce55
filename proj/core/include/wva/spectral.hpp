#pragma once

// Frequency grids, power spectra and the scalar functionals computed on them.
// Frequencies are in THz, wavelengths in nm.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace wva {

inline constexpr double kSpeedOfLightNmThz = 299792.458;
inline constexpr double kDefaultReferenceWavelengthNm = 1551.0;

/// Uniform sampling of optical frequency: n_points nodes covering
/// [center - span/2, center + span/2]. All nodes are strictly positive.
class FrequencyGrid {
 public:
  /// Throws InvalidArgument unless span > 0, n_points >= 2 and center - span/2 > 0.
  FrequencyGrid(double center_thz, double span_thz, std::size_t n_points);

  double center() const noexcept { return center_; }
  double span() const noexcept { return span_; }
  std::size_t size() const noexcept { return n_points_; }
  double spacing() const noexcept { return span_ / static_cast<double>(n_points_ - 1); }
  double front() const noexcept { return node(0); }
  double back() const noexcept { return node(n_points_ - 1); }

  // Nodes are placed symmetrically about the center so that mirror-symmetric
  // inputs stay symmetric after sampling.
  double node(std::size_t i) const noexcept {
    const double twice_offset = 2.0 * static_cast<double>(i) - static_cast<double>(n_points_ - 1);
    return center_ + twice_offset * span_ / (2.0 * static_cast<double>(n_points_ - 1));
  }

  std::vector<double> nodes() const;
  bool contains(double nu_thz) const noexcept { return nu_thz >= front() && nu_thz <= back(); }

  bool operator==(const FrequencyGrid&) const = default;

 private:
  double center_;
  double span_;
  std::size_t n_points_;
};

FrequencyGrid make_grid(double center_thz, double span_thz, std::size_t n_points);

/// Non-negative power density sampled on a FrequencyGrid (arbitrary units).
class Spectrum {
 public:
  /// Throws InvalidArgument if the sample count does not match the grid or a
  /// sample is negative or non-finite.
  Spectrum(FrequencyGrid grid, std::vector<double> samples);

  static Spectrum zeros(const FrequencyGrid& grid);

  const FrequencyGrid& grid() const noexcept { return grid_; }
  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }

 private:
  FrequencyGrid grid_;
  std::vector<double> samples_;
};

/// Conversion between the wavelength units used for reporting and the
/// frequency units used internally, linearised at a reference wavelength.
struct UnitContext {
  static constexpr double speed_of_light = kSpeedOfLightNmThz;  // nm * THz
  double reference_wavelength_nm = kDefaultReferenceWavelengthNm;

  void validate() const;
  double reference_frequency_thz() const;

  // Widths are magnitudes: |dnu| = c |dlambda| / lambda^2.
  double width_nm_to_thz(double width_nm) const;
  double width_thz_to_nm(double width_thz) const;

  // Shifts carry sign: a positive wavelength shift is a negative frequency shift.
  double shift_nm_to_thz(double shift_nm) const;
  double shift_thz_to_nm(double shift_thz) const;
};

double wavelength_to_frequency(double wavelength_nm);
double frequency_to_wavelength(double frequency_thz);

/// Trapezoidal integral of the samples over the grid.
double total_power(const Spectrum& s);

/// Power-weighted mean frequency (trapezoidal first moment over total power).
/// Throws NoSignal when the total power is zero.
double centroid(const Spectrum& s);

/// Index of the largest sample (first one on ties).
std::size_t peak_index(const Spectrum& s);

/// Centre of the main lobe: first moment of (s - max/2) over the contiguous
/// region around the peak where it is positive, integrating the linear
/// interpolant. Insensitive to features below half maximum. Throws NoSignal
/// when the spectrum has no positive sample.
double main_lobe_center(const Spectrum& s);

/// Multiplies each sample by exp[-((nu - center)/half_width)^order].
/// order must be a positive even integer and half_width > 0.
Spectrum super_gaussian_filter(const Spectrum& s, double center_thz, double half_width_thz, int order);

/// Spectrum CSV: header `frequency_thz,power`, one row per node in ascending,
/// uniformly spaced frequency, 12 significant digits. Lines starting with '#'
/// and blank lines are ignored on input.
Spectrum read_spectrum_csv(std::istream& in);
Spectrum read_spectrum_csv(const std::filesystem::path& path);
void write_spectrum_csv(const Spectrum& s, std::ostream& out);
void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path);

}  // namespace wva
