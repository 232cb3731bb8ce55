#include "wva/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wva/error.hpp"

namespace wva {

FrequencyGrid::FrequencyGrid(double center_thz, double span_thz, std::size_t n_points)
    : center_(center_thz), span_(span_thz), n_points_(n_points) {
  if (!std::isfinite(center_thz) || !std::isfinite(span_thz)) {
    throw InvalidArgument("frequency grid: center and span must be finite");
  }
  if (span_thz <= 0.0) {
    throw InvalidArgument("frequency grid: span must be positive");
  }
  if (n_points < 2) {
    throw InvalidArgument("frequency grid: need at least 2 points");
  }
  if (front() <= 0.0) {
    throw InvalidArgument("frequency grid: lowest node " + std::to_string(front()) +
                          " THz is not a positive frequency");
  }
}

std::vector<double> FrequencyGrid::nodes() const {
  std::vector<double> out(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) out[i] = node(i);
  return out;
}

FrequencyGrid make_grid(double center_thz, double span_thz, std::size_t n_points) {
  return FrequencyGrid(center_thz, span_thz, n_points);
}

Spectrum::Spectrum(FrequencyGrid grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw InvalidArgument("spectrum: " + std::to_string(samples_.size()) + " samples for a grid of " +
                          std::to_string(grid_.size()) + " nodes");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i]) || samples_[i] < 0.0) {
      throw InvalidArgument("spectrum: sample " + std::to_string(i) + " is negative or not finite");
    }
  }
}

Spectrum Spectrum::zeros(const FrequencyGrid& grid) {
  return Spectrum(grid, std::vector<double>(grid.size(), 0.0));
}

void UnitContext::validate() const {
  if (!(reference_wavelength_nm > 0.0) || !std::isfinite(reference_wavelength_nm)) {
    throw InvalidArgument("unit context: reference wavelength must be positive");
  }
}

double UnitContext::reference_frequency_thz() const {
  return speed_of_light / reference_wavelength_nm;
}

double UnitContext::width_nm_to_thz(double width_nm) const {
  return speed_of_light * width_nm / (reference_wavelength_nm * reference_wavelength_nm);
}

double UnitContext::width_thz_to_nm(double width_thz) const {
  return width_thz * reference_wavelength_nm * reference_wavelength_nm / speed_of_light;
}

double UnitContext::shift_nm_to_thz(double shift_nm) const { return -width_nm_to_thz(shift_nm); }

double UnitContext::shift_thz_to_nm(double shift_thz) const { return -width_thz_to_nm(shift_thz); }

double wavelength_to_frequency(double wavelength_nm) {
  if (!(wavelength_nm > 0.0)) throw InvalidArgument("wavelength must be positive");
  return kSpeedOfLightNmThz / wavelength_nm;
}

double frequency_to_wavelength(double frequency_thz) {
  if (!(frequency_thz > 0.0)) throw InvalidArgument("frequency must be positive");
  return kSpeedOfLightNmThz / frequency_thz;
}

namespace {

// Trapezoid weights on a uniform grid: h for interior nodes, h/2 at the ends.
template <typename F>
double trapezoid(const Spectrum& s, F&& integrand) {
  const auto samples = s.samples();
  const std::size_t n = samples.size();
  double sum = 0.5 * (integrand(0) + integrand(n - 1));
  for (std::size_t i = 1; i + 1 < n; ++i) sum += integrand(i);
  return sum * s.grid().spacing();
}

}  // namespace

double total_power(const Spectrum& s) {
  return trapezoid(s, [&](std::size_t i) { return s[i]; });
}

double centroid(const Spectrum& s) {
  const double power = total_power(s);
  if (!(power > 0.0)) throw NoSignal("centroid: spectrum carries no power");
  // First moment about the grid center keeps the sum well conditioned.
  const FrequencyGrid& g = s.grid();
  const double moment = trapezoid(s, [&](std::size_t i) { return (g.node(i) - g.center()) * s[i]; });
  return std::clamp(g.center() + moment / power, g.front(), g.back());
}

std::size_t peak_index(const Spectrum& s) {
  const auto samples = s.samples();
  return static_cast<std::size_t>(std::distance(samples.begin(), std::max_element(samples.begin(), samples.end())));
}

double main_lobe_center(const Spectrum& s) {
  const std::size_t k = peak_index(s);
  if (!(s[k] > 0.0)) throw NoSignal("main lobe: spectrum has no positive sample");
  const double half = 0.5 * s[k];
  std::size_t lo = k;
  std::size_t hi = k;
  while (lo > 0 && s[lo - 1] > half) --lo;
  while (hi + 1 < s.size() && s[hi + 1] > half) ++hi;

  const FrequencyGrid& g = s.grid();
  const double h = g.spacing();
  double area = 0.0;
  double moment = 0.0;  // about node k
  const auto add_cell = [&](std::size_t left) {
    const double a = s[left] - half;
    const double b = s[left + 1] - half;
    const double x0 = (static_cast<double>(left) - static_cast<double>(k)) * h;
    if (a >= 0.0 && b >= 0.0) {
      area += 0.5 * (a + b) * h;
      moment += 0.5 * (a + b) * h * x0 + h * h * (a + 2.0 * b) / 6.0;
    } else if (b > 0.0) {  // rising edge, zero crossing inside the cell
      const double w = h * b / (b - a);
      area += 0.5 * b * w;
      moment += 0.5 * b * w * (x0 + h - w / 3.0);
    } else if (a > 0.0) {  // falling edge
      const double w = h * a / (a - b);
      area += 0.5 * a * w;
      moment += 0.5 * a * w * (x0 + w / 3.0);
    }
  };
  for (std::size_t i = (lo > 0 ? lo - 1 : lo); i < std::min(hi + 1, s.size() - 1); ++i) add_cell(i);
  if (!(area > 0.0)) return g.node(k);
  return g.node(k) + moment / area;
}

Spectrum super_gaussian_filter(const Spectrum& s, double center_thz, double half_width_thz, int order) {
  if (order <= 0 || order % 2 != 0) {
    throw InvalidArgument("super-Gaussian filter: order must be a positive even integer");
  }
  if (!(half_width_thz > 0.0)) {
    throw InvalidArgument("super-Gaussian filter: half width must be positive");
  }
  const FrequencyGrid& g = s.grid();
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = (g.node(i) - center_thz) / half_width_thz;
    out[i] = s[i] * std::exp(-std::pow(x, order));
  }
  return Spectrum(g, std::move(out));
}

}  // namespace wva
