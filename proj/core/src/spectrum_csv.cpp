#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "wva/error.hpp"
#include "wva/spectral.hpp"
#include "wva/text.hpp"

namespace wva {

namespace {

constexpr std::string_view kHeader = "frequency_thz,power";
constexpr double kUniformityTolerance = 1e-6;

struct Row {
  double frequency;
  double power;
  std::size_t line;
};

}  // namespace

Spectrum read_spectrum_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<Row> rows;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!have_header) {
      if (text != kHeader) {
        throw ParseError("expected header '" + std::string(kHeader) + "'", line_no);
      }
      have_header = true;
      continue;
    }
    const auto fields = split_fields(text);
    if (fields.size() != 2) throw ParseError("expected 2 columns, found " + std::to_string(fields.size()), line_no);
    const auto nu = parse_double(fields[0]);
    const auto p = parse_double(fields[1]);
    if (!nu || !p) throw ParseError("non-numeric field", line_no);
    if (*p < 0.0) throw ParseError("negative power value", line_no);
    if (!(*nu > 0.0)) throw ParseError("frequency must be positive", line_no);
    if (!rows.empty() && !(*nu > rows.back().frequency)) {
      throw ParseError("frequency column is not strictly ascending", line_no);
    }
    rows.push_back({*nu, *p, line_no});
  }
  if (!have_header) throw ParseError("missing header '" + std::string(kHeader) + "'", line_no);
  if (rows.size() < 2) throw ParseError("need at least 2 data rows", line_no);

  const double first = rows.front().frequency;
  const double last = rows.back().frequency;
  FrequencyGrid grid(0.5 * (first + last), last - first, rows.size());
  const double h = grid.spacing();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double step = rows[i].frequency - rows[i - 1].frequency;
    if (std::abs(step - h) > kUniformityTolerance * h) {
      throw ParseError("frequency spacing is not uniform", rows[i].line);
    }
  }

  std::vector<double> samples;
  samples.reserve(rows.size());
  for (const Row& r : rows) samples.push_back(r.power);
  return Spectrum(grid, std::move(samples));
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_spectrum_csv(in);
}

void write_spectrum_csv(const Spectrum& s, std::ostream& out) {
  out << kHeader << '\n';
  const FrequencyGrid& g = s.grid();
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << format_decimal(g.node(i)) << ',' << format_decimal(s[i]) << '\n';
  }
}

void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  write_spectrum_csv(s, out);
  if (!out) throw InvalidArgument("write failed: " + path.string());
}

}  // namespace wva
