#include "wva/cli/commands.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "wva/amplification_limit.hpp"
#include "wva/error.hpp"
#include "wva/fbg.hpp"
#include "wva/optics.hpp"
#include "wva/osa.hpp"
#include "wva/text.hpp"

namespace wva::cli {

namespace {

using nlohmann::json;

constexpr std::array kCommands{"sweep-beta",   "sweep-temp", "amax-curve", "theory-lines",
                               "calibrate",    "dump-spectrum", "max-usable"};

double rad(double deg) { return deg * std::numbers::pi / 180.0; }

double num(const json& o, const char* key) {
  const json& v = o.at(key);
  if (!v.is_number()) throw ConfigError(std::string("/options/") + key, "expected a number");
  return v.get<double>();
}

std::vector<double> nums(const json& o, const char* key) {
  const json& v = o.at(key);
  if (!v.is_array()) throw ConfigError(std::string("/options/") + key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(std::string("/options/") + key, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void set_default(json& o, const char* key, const json& value) {
  if (!o.contains(key) || o[key].is_null()) o[key] = value;
}

double last_dt(const ScenarioSpec& spec) { return spec.dt_list_c().back(); }

void default_sweep(json& o, const ScenarioSpec& spec, const BetaSweep& fallback) {
  const BetaSweep s = spec.beta_sweep.value_or(fallback);
  set_default(o, "beta_min_deg", s.min_deg);
  set_default(o, "beta_max_deg", s.max_deg);
  set_default(o, "beta_step_deg", s.step_deg);
}

BetaSweep sweep_from(const json& o) {
  const BetaSweep s{num(o, "beta_min_deg"), num(o, "beta_max_deg"), num(o, "beta_step_deg")};
  if (s.min_deg < -90.0 || s.max_deg > 90.0) throw InvalidArgument("beta range must stay within [-90, 90] deg");
  return s;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
  if (!f) throw Error("write failed: " + path.string());
}

std::string number_label(double v) { return format_decimal(v); }

double snr_of(const InterrogationResult& r, const ScenarioSpec& spec) {
  if (!spec.osa) return std::numeric_limits<double>::infinity();
  return snr_estimate(r.filtered, *spec.osa).snr_db;
}

// --- commands --------------------------------------------------------------

std::vector<std::string> sweep_beta(const json& o, const Context& ctx) {
  Table t = sweep_beta_table(o, ctx.spec, ctx.err);
  std::vector<std::string> files{"sweep_beta.csv"};
  write_text(ctx.out_dir / files[0], format_csv(t));

  const auto dumps = nums(o, "dump_spectra_deg");
  if (!dumps.empty()) {
    const double t1 = ctx.spec.t2_ref_c + num(o, "dt_c");
    const Interrogator probe(build_scenario(ctx.spec, t1, 0.0));
    const std::size_t base = sweep_from(o).angles_deg().size();
    for (std::size_t k = 0; k < dumps.size(); ++k) {
      const Spectrum s = probe.measured(t1, rad(dumps[k]), base + k);
      const std::string name = "spectrum_beta_" + number_label(dumps[k]) + ".csv";
      write_spectrum_csv(s, ctx.out_dir / name);
      files.push_back(name);
    }
  }
  ctx.out << "sweep-beta: " << t.rows.size() << " angles\n";
  return files;
}

std::vector<std::string> sweep_temp(const json& o, const Context& ctx) {
  const Table t = sweep_temp_table(o, ctx.spec);
  write_text(ctx.out_dir / "sweep_temp.csv", format_csv(t));
  for (const auto& line : t.footer) ctx.out << "sweep-temp: " << line << '\n';
  return {"sweep_temp.csv"};
}

std::vector<std::string> amax_curve(const json& o, const Context& ctx) {
  write_text(ctx.out_dir / "amax_curve.csv", format_csv(amax_curve_table(o)));
  const Table peaks = amax_peaks_table(o);
  write_text(ctx.out_dir / "amax_peaks.csv", format_csv(peaks));
  for (const auto& r : peaks.rows) {
    ctx.out << "amax-curve: g=" << format_decimal(r[0]) << " A_max=" << format_decimal(r[1], 6)
            << " at beta=" << format_decimal(r[2], 6) << " deg\n";
  }
  return {"amax_curve.csv", "amax_peaks.csv"};
}

std::vector<std::string> theory_lines(const json& o, const Context& ctx) {
  write_text(ctx.out_dir / "theory_lines.csv", format_csv(theory_lines_table(o)));
  return {"theory_lines.csv"};
}

std::vector<std::string> calibrate(const json& o, const Context& ctx) {
  const std::string input = o.at("input").get<std::string>();
  std::ifstream in(input, std::ios::binary);
  if (!in) throw ConfigError("/options/input", "cannot open " + input);
  const auto points = read_calibration_csv(in);
  const CalibrationResult r = fit_sensitivity(points);
  const json j = {{"slope_nm_per_c", r.slope_nm_per_c},
                  {"intercept_nm", r.intercept_nm},
                  {"residual_rms_nm", r.residual_rms_nm},
                  {"n_points", r.n_points}};
  write_text(ctx.out_dir / "calibration.json", j.dump(2) + "\n");
  ctx.out << "calibrate: slope=" << format_decimal(r.slope_nm_per_c) << " nm/degC intercept="
          << format_decimal(r.intercept_nm) << " nm rms=" << format_decimal(r.residual_rms_nm) << " nm n="
          << r.n_points << '\n';
  return {"calibration.json"};
}

std::vector<std::string> dump_spectrum(const json& o, const Context& ctx) {
  const double t1 = ctx.spec.t2_ref_c + num(o, "dt_c");
  const double beta = rad(num(o, "beta_deg"));
  const Interrogator probe(build_scenario(ctx.spec, t1, beta));
  const auto r = probe.run(t1, beta);
  write_spectrum_csv(r.raw, ctx.out_dir / "spectrum_raw.csv");
  write_spectrum_csv(r.filtered, ctx.out_dir / "spectrum_filtered.csv");
  ctx.out << "dump-spectrum: centroid shift " << format_decimal(r.centroid_nm_shift) << " nm, A="
          << format_decimal(r.a_effective) << '\n';
  return {"spectrum_raw.csv", "spectrum_filtered.csv"};
}

std::vector<std::string> max_usable(const json& o, const Context& ctx) {
  if (!ctx.spec.osa) throw ConfigError("/osa", "max-usable needs an osa section");
  const double snr_min = num(o, "snr_min_db");
  const double t1 = ctx.spec.t2_ref_c + num(o, "dt_c");
  const Scenario sc = build_scenario(ctx.spec, t1, 0.0);
  const auto points = sweep_usable_amplification(sc, sweep_from(o));

  Table t{{"beta_deg", "a", "snr_db"}, {}, {}};
  for (const auto& p : points) t.rows.push_back({p.beta_rad * 180.0 / std::numbers::pi, p.a, p.snr_db});
  write_text(ctx.out_dir / "max_usable_sweep.csv", format_csv(t));

  const UsablePoint best = select_max_usable(points, snr_min);
  const json j = {{"beta_deg", best.beta_rad * 180.0 / std::numbers::pi},
                  {"a", best.a},
                  {"snr_db", best.snr_db},
                  {"snr_min_db", snr_min}};
  write_text(ctx.out_dir / "max_usable.json", j.dump(2) + "\n");
  ctx.out << "max-usable: A=" << format_decimal(best.a, 6) << " at beta="
          << format_decimal(best.beta_rad * 180.0 / std::numbers::pi, 6) << " deg\n";
  return {"max_usable_sweep.csv", "max_usable.json"};
}

}  // namespace

std::string format_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + format_decimal(row[i]);
    s += '\n';
  }
  for (const auto& line : t.footer) s += "# " + line + '\n';
  return s;
}

bool is_command(std::string_view name) {
  for (const char* c : kCommands) {
    if (name == c) return true;
  }
  return false;
}

json resolve_options(std::string_view command, json o, const ScenarioSpec& spec) {
  if (o.is_null()) o = json::object();
  if (!o.is_object()) throw ConfigError("/options", "expected an object");
  if (command == "sweep-beta") {
    default_sweep(o, spec, BetaSweep{-90.0, 0.0, 1.0});
    set_default(o, "dt_c", last_dt(spec));
    set_default(o, "dump_spectra_deg", json::array());
  } else if (command == "sweep-temp") {
    set_default(o, "dt_c", spec.dt_list_c());
    set_default(o, "beta_deg", spec.beta_deg.value_or(0.0));
  } else if (command == "amax-curve") {
    set_default(o, "g", std::vector<double>{0.99, 0.999, 0.9999});
    set_default(o, "beta_min_deg", -90.0);
    set_default(o, "beta_max_deg", 0.0);
    set_default(o, "beta_step_deg", 0.01);
  } else if (command == "theory-lines") {
    set_default(o, "a", std::vector<double>{1.0, 25.0, 50.0});
    set_default(o, "beta_deg", json::array());
    set_default(o, "g", 0.9999);
    set_default(o, "dt_min_c", 0.0);
    set_default(o, "dt_max_c", 12.0);
    set_default(o, "dt_step_c", 1.0);
    set_default(o, "kappa_nm_per_c", spec.fbg1.kappa_nm_per_c);
  } else if (command == "calibrate") {
    if (!o.contains("input") || !o["input"].is_string()) throw ConfigError("/options/input", "input CSV required");
    o["input"] = std::filesystem::absolute(o["input"].get<std::string>()).lexically_normal().string();
  } else if (command == "dump-spectrum") {
    set_default(o, "beta_deg", spec.beta_deg.value_or(0.0));
    set_default(o, "dt_c", last_dt(spec));
  } else if (command == "max-usable") {
    if (!o.contains("snr_min_db") || !o["snr_min_db"].is_number()) {
      throw ConfigError("/options/snr_min_db", "SNR floor required");
    }
    default_sweep(o, spec, BetaSweep{});
    set_default(o, "dt_c", last_dt(spec));
  } else {
    throw ConfigError("/command", "unknown command '" + std::string(command) + "'");
  }
  return o;
}

std::vector<std::string> execute(std::string_view command, const json& o, const Context& ctx) {
  std::filesystem::create_directories(ctx.out_dir);
  if (command == "sweep-beta") return sweep_beta(o, ctx);
  if (command == "sweep-temp") return sweep_temp(o, ctx);
  if (command == "amax-curve") return amax_curve(o, ctx);
  if (command == "theory-lines") return theory_lines(o, ctx);
  if (command == "calibrate") return calibrate(o, ctx);
  if (command == "dump-spectrum") return dump_spectrum(o, ctx);
  if (command == "max-usable") return max_usable(o, ctx);
  throw ConfigError("/command", "unknown command '" + std::string(command) + "'");
}

Table sweep_beta_table(const json& o, const ScenarioSpec& spec, std::ostream& warn) {
  const auto angles = sweep_from(o).angles_deg();
  const double t1 = spec.t2_ref_c + num(o, "dt_c");
  const Interrogator probe(build_scenario(spec, t1, 0.0));
  const double p0 = total_power(probe.post_selected(t1, 0.0));

  Table t{{"beta_deg", "centroid_shift_nm", "a_effective", "total_power_rel", "snr_db"}, {}, {}};
  for (std::size_t i = 0; i < angles.size(); ++i) {
    try {
      const auto r = probe.run(t1, rad(angles[i]), i);
      t.rows.push_back({angles[i], r.centroid_nm_shift, r.a_effective, total_power(r.raw) / p0, snr_of(r, spec)});
    } catch (const SingularPostSelection& e) {
      warn << "warning: beta=" << format_decimal(angles[i]) << " deg skipped: " << e.what() << '\n';
    } catch (const NoSignal& e) {
      warn << "warning: beta=" << format_decimal(angles[i]) << " deg skipped: " << e.what() << '\n';
    }
  }
  return t;
}

Table sweep_temp_table(const json& o, const ScenarioSpec& spec) {
  const auto dts = nums(o, "dt_c");
  if (dts.size() < 2) throw DegenerateFit("sweep-temp needs at least two temperatures");
  const double beta = rad(num(o, "beta_deg"));
  const Interrogator probe(build_scenario(spec, spec.t2_ref_c, beta));

  Table t{{"dt_c", "centroid_shift_nm"}, {}, {}};
  std::vector<CalibrationPoint> pts;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    const auto r = probe.run(spec.t2_ref_c + dts[i], beta, i);
    t.rows.push_back({dts[i], r.centroid_nm_shift});
    pts.push_back({dts[i], r.centroid_nm_shift});
  }
  const CalibrationResult fit = fit_sensitivity(pts);
  t.footer = {"slope_nm_per_c=" + format_decimal(fit.slope_nm_per_c),
              "intercept_nm=" + format_decimal(fit.intercept_nm),
              "residual_rms_nm=" + format_decimal(fit.residual_rms_nm),
              "n_points=" + std::to_string(fit.n_points)};
  return t;
}

namespace {

std::vector<double> checked_g(const json& o) {
  auto gs = nums(o, "g");
  for (double g : gs) {
    if (!(std::abs(g) < 1.0)) throw UnboundedAmplification("amax-curve: |g| must be below 1, got " + format_decimal(g));
  }
  return gs;
}

}  // namespace

Table amax_curve_table(const json& o) {
  const auto angles = sweep_from(o).angles_deg();
  Table t{{"beta_deg", "g", "A"}, {}, {}};
  for (double g : checked_g(o)) {
    const double delta = std::acos(g);
    for (double b : angles) t.rows.push_back({b, g, amplification_factor(rad(b), 1.0, delta)});
  }
  return t;
}

Table amax_peaks_table(const json& o) {
  const auto angles = sweep_from(o).angles_deg();
  Table t{{"g", "a_max", "beta_star_deg", "beta_conjugate_deg", "sweep_a_max", "sweep_beta_deg"}, {}, {}};
  for (double g : checked_g(o)) {
    const double delta = std::acos(g);
    const AmplificationPeak peak = max_amplification(1.0, delta);
    double best_a = -std::numeric_limits<double>::infinity();
    double best_b = 0.0;
    for (double b : angles) {
      const double a = amplification_factor(rad(b), 1.0, delta);
      if (a > best_a) {
        best_a = a;
        best_b = b;
      }
    }
    t.rows.push_back({g, peak.a_max, peak.beta_star_rad * 180.0 / std::numbers::pi,
                      peak.beta_conjugate_rad * 180.0 / std::numbers::pi, best_a, best_b});
  }
  return t;
}

Table theory_lines_table(const json& o) {
  const double kappa = num(o, "kappa_nm_per_c");
  if (!std::isfinite(kappa)) throw InvalidArgument("theory-lines: kappa must be finite");
  const double lo = num(o, "dt_min_c");
  const double hi = num(o, "dt_max_c");
  const double step = num(o, "dt_step_c");
  if (!(step > 0.0) || !(hi >= lo)) throw InvalidArgument("theory-lines: need dt_step > 0 and dt_max >= dt_min");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-6)) + 1;

  std::vector<double> as = nums(o, "a");
  const double g = num(o, "g");
  for (double b : nums(o, "beta_deg")) {
    if (!(std::abs(g) < 1.0)) throw UnboundedAmplification("theory-lines: |g| must be below 1");
    as.push_back(amplification_factor(rad(b), 1.0, std::acos(g)));
  }

  Table t{{"dt_c", "a", "shift_nm"}, {}, {}};
  for (double a : as) {
    for (std::size_t i = 0; i < count; ++i) {
      const double dt = lo + static_cast<double>(i) * step;
      t.rows.push_back({dt, a, centroid_shift_model(dt, kappa, a, 0.0)});
    }
  }
  return t;
}

std::vector<CalibrationPoint> read_calibration_csv(std::istream& in) {
  std::vector<CalibrationPoint> pts;
  std::string line;
  std::size_t number = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_fields(body);
    if (fields.size() != 2) throw ParseError("expected two fields (dt_c, shift_nm)", number);
    const auto dt = parse_double(fields[0]);
    const auto shift = parse_double(fields[1]);
    if (!dt || !shift) {
      if (header_allowed && !dt && !shift) {
        header_allowed = false;
        continue;
      }
      throw ParseError("non-numeric field", number);
    }
    if (!std::isfinite(*dt) || !std::isfinite(*shift)) throw ParseError("non-finite value", number);
    header_allowed = false;
    pts.push_back({*dt, *shift});
  }
  return pts;
}

}  // namespace wva::cli
