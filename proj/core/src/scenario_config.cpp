#include "wva/scenario_config.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wva/error.hpp"
#include "wva/optics.hpp"

namespace wva {

namespace {

using nlohmann::json;

// Read access to one JSON object that remembers which keys were consumed, so
// finish() can reject typos.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(display(), "expected an object");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return node_.contains(key) && !node_.at(key).is_null();
  }

  double number(const std::string& key, double fallback) {
    return has(key) ? as_number(key) : fallback;
  }

  std::optional<double> optional_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return as_number(key);
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_boolean()) throw ConfigError(field(key), "expected true or false");
    return v.get<bool>();
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback) {
    if (!has(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_number_integer()) throw ConfigError(field(key), "expected an integer");
    return v.get<std::int64_t>();
  }

  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_number_unsigned()) throw ConfigError(field(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::vector<double> numbers(const std::string& key) {
    if (!has(key)) return {};
    const json& v = node_.at(key);
    if (!v.is_array()) throw ConfigError(field(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) throw ConfigError(field(key) + "/" + std::to_string(i), "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  std::optional<Section> child(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return Section(node_.at(key), field(key));
  }

  void finish() const {
    for (const auto& item : node_.items()) {
      if (!seen_.contains(item.key())) throw ConfigError(field(item.key()), "unknown key");
    }
  }

  std::string field(const std::string& key) const { return path_ + "/" + key; }

 private:
  double as_number(const std::string& key) const {
    const json& v = node_.at(key);
    if (!v.is_number()) throw ConfigError(field(key), "expected a number");
    return v.get<double>();
  }

  std::string display() const { return path_.empty() ? "/" : path_; }

  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

FbgSpec read_fbg(Section s) {
  FbgSpec f;
  f.center_nm = s.number("center_nm", f.center_nm);
  f.kappa_nm_per_c = s.number("kappa_nm_per_c", f.kappa_nm_per_c);
  f.fwhm_nm = s.number("fwhm_nm", f.fwhm_nm);
  f.reflect_efficiency = s.number("reflect_efficiency", f.reflect_efficiency);
  require(f.center_nm > 0.0, s.field("center_nm"), "must be positive");
  require(f.fwhm_nm > 0.0, s.field("fwhm_nm"), "must be positive");
  require(f.reflect_efficiency > 0.0 && f.reflect_efficiency <= 1.0, s.field("reflect_efficiency"),
          "must lie in (0, 1]");
  if (auto lobe = s.child("side_lobe")) {
    SideLobeSpec l;
    l.offset_nm = lobe->number("offset_nm", l.offset_nm);
    l.rel_amplitude = lobe->number("rel_amplitude", l.rel_amplitude);
    l.fwhm_nm = lobe->optional_number("fwhm_nm");
    require(l.rel_amplitude >= 0.0 && l.rel_amplitude < 1.0, lobe->field("rel_amplitude"), "must lie in [0, 1)");
    require(!l.fwhm_nm || *l.fwhm_nm > 0.0, lobe->field("fwhm_nm"), "must be positive");
    lobe->finish();
    f.side_lobe = l;
  }
  s.finish();
  return f;
}

json fbg_json(const FbgSpec& f) {
  json j = {{"center_nm", f.center_nm},
            {"kappa_nm_per_c", f.kappa_nm_per_c},
            {"fwhm_nm", f.fwhm_nm},
            {"reflect_efficiency", f.reflect_efficiency}};
  if (f.side_lobe) {
    j["side_lobe"] = {{"offset_nm", f.side_lobe->offset_nm},
                      {"rel_amplitude", f.side_lobe->rel_amplitude},
                      {"fwhm_nm", f.side_lobe->fwhm_nm.value_or(f.fwhm_nm)}};
  }
  return j;
}

FbgParams make_fbg(const FbgSpec& f, const UnitContext& u) {
  FbgParams p{wavelength_to_frequency(f.center_nm), f.kappa_nm_per_c,
              bandwidth_from_power_fwhm(u.width_nm_to_thz(f.fwhm_nm)), f.reflect_efficiency, std::nullopt};
  if (f.side_lobe) {
    p.side_lobe = SideLobe{u.shift_nm_to_thz(f.side_lobe->offset_nm), f.side_lobe->rel_amplitude,
                           bandwidth_from_power_fwhm(u.width_nm_to_thz(f.side_lobe->fwhm_nm.value_or(f.fwhm_nm)))};
  }
  return p;
}

}  // namespace

std::vector<double> ScenarioSpec::dt_list_c() const {
  if (t1_c.empty()) return {0.0};
  std::vector<double> out;
  out.reserve(t1_c.size());
  for (double t : t1_c) out.push_back(t - t2_ref_c);
  return out;
}

ScenarioSpec parse_scenario_spec(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }

  ScenarioSpec spec;
  Section top(root, "");

  if (auto s = top.child("units")) {
    spec.reference_wavelength_nm = s->number("reference_wavelength_nm", spec.reference_wavelength_nm);
    require(spec.reference_wavelength_nm > 0.0, s->field("reference_wavelength_nm"), "must be positive");
    s->finish();
  }
  if (auto s = top.child("grid")) {
    GridSpec g{s->number("center_nm", 0.0), s->number("span_nm", 0.0), 4001};
    const auto n = s->integer("n_points", 4001);
    require(g.center_nm > 0.0, s->field("center_nm"), "required and positive");
    require(g.span_nm > 0.0, s->field("span_nm"), "required and positive");
    require(n >= 2, s->field("n_points"), "must be at least 2");
    g.n_points = static_cast<std::size_t>(n);
    s->finish();
    spec.grid = g;
  }
  if (auto s = top.child("source")) {
    spec.source_center_nm = s->number("center_nm", spec.source_center_nm);
    spec.source_pulse_fwhm_ps = s->number("pulse_fwhm_ps", spec.source_pulse_fwhm_ps);
    spec.source_amplitude = s->number("amplitude", spec.source_amplitude);
    require(spec.source_center_nm > 0.0, s->field("center_nm"), "must be positive");
    require(spec.source_pulse_fwhm_ps > 0.0, s->field("pulse_fwhm_ps"), "must be positive");
    s->finish();
  }
  if (auto s = top.child("fbg1")) spec.fbg1 = read_fbg(*s);
  if (auto s = top.child("fbg2")) spec.fbg2 = read_fbg(*s);
  if (auto s = top.child("interferometer")) {
    spec.tau_ps = s->number("tau_ps", spec.tau_ps);
    spec.phi_rad = s->number("phi_rad", spec.phi_rad);
    spec.lcvr_rad = s->number("lcvr_rad", spec.lcvr_rad);
    s->finish();
  }
  if (auto s = top.child("postselect")) {
    spec.beta_deg = s->optional_number("beta_deg");
    if (spec.beta_deg) require(std::abs(*spec.beta_deg) <= 90.0, s->field("beta_deg"), "must lie in [-90, 90]");
    const auto lo = s->optional_number("beta_min_deg");
    const auto hi = s->optional_number("beta_max_deg");
    const auto step = s->optional_number("beta_step_deg");
    if (lo || hi || step) {
      require(lo && hi && step, s->field("beta_min_deg"), "sweep needs beta_min_deg, beta_max_deg and beta_step_deg");
      require(*step > 0.0, s->field("beta_step_deg"), "must be positive");
      require(*hi >= *lo, s->field("beta_max_deg"), "must not be below beta_min_deg");
      require(*lo >= -90.0 && *hi <= 90.0, s->field("beta_min_deg"), "sweep must stay within [-90, 90]");
      spec.beta_sweep = BetaSweep{*lo, *hi, *step};
    }
    s->finish();
  }
  if (auto s = top.child("temperatures")) {
    spec.t2_ref_c = s->number("t2_ref_c", spec.t2_ref_c);
    spec.t1_c = s->numbers("t1_c");
    s->finish();
  }
  if (auto s = top.child("filter")) {
    spec.filter.enabled = s->boolean("enabled", spec.filter.enabled);
    const auto order = s->integer("order", spec.filter.order);
    require(order > 0 && order % 2 == 0 && order <= 64, s->field("order"), "must be a positive even integer");
    spec.filter.order = static_cast<int>(order);
    spec.filter.half_width_factor = s->number("half_width_factor", spec.filter.half_width_factor);
    require(spec.filter.half_width_factor > 0.0, s->field("half_width_factor"), "must be positive");
    s->finish();
  }
  if (auto s = top.child("osa")) {
    OsaParams p;
    p.rbw_nm = s->number("rbw_nm", p.rbw_nm);
    p.noise_floor = s->number("noise_floor", p.noise_floor);
    p.rel_noise = s->number("rel_noise", p.rel_noise);
    p.seed = s->unsigned_integer("seed", p.seed);
    require(p.rbw_nm >= 0.0, s->field("rbw_nm"), "must be >= 0");
    require(p.noise_floor >= 0.0, s->field("noise_floor"), "must be >= 0");
    require(p.rel_noise >= 0.0 && p.rel_noise < 1.0, s->field("rel_noise"), "must lie in [0, 1)");
    s->finish();
    spec.osa = p;
  }
  top.finish();

  // Physical consistency is checked once here so errors carry a field path.
  try {
    (void)build_scenario(spec);
  } catch (const InvalidArgument& e) {
    throw ConfigError("/", e.what());
  }
  return spec;
}

ScenarioSpec load_scenario_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("/", "cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario_spec(text.str());
}

std::string to_json(const ScenarioSpec& spec) {
  json j;
  j["units"] = {{"reference_wavelength_nm", spec.reference_wavelength_nm}};
  if (spec.grid) {
    j["grid"] = {{"center_nm", spec.grid->center_nm}, {"span_nm", spec.grid->span_nm}, {"n_points", spec.grid->n_points}};
  }
  j["source"] = {{"center_nm", spec.source_center_nm},
                 {"pulse_fwhm_ps", spec.source_pulse_fwhm_ps},
                 {"amplitude", spec.source_amplitude}};
  j["fbg1"] = fbg_json(spec.fbg1);
  j["fbg2"] = fbg_json(spec.fbg2);
  j["interferometer"] = {{"tau_ps", spec.tau_ps}, {"phi_rad", spec.phi_rad}, {"lcvr_rad", spec.lcvr_rad}};
  json post = json::object();
  if (spec.beta_deg) post["beta_deg"] = *spec.beta_deg;
  if (spec.beta_sweep) {
    post["beta_min_deg"] = spec.beta_sweep->min_deg;
    post["beta_max_deg"] = spec.beta_sweep->max_deg;
    post["beta_step_deg"] = spec.beta_sweep->step_deg;
  }
  j["postselect"] = post;
  j["temperatures"] = {{"t2_ref_c", spec.t2_ref_c}, {"t1_c", spec.t1_c}};
  j["filter"] = {{"enabled", spec.filter.enabled},
                 {"order", spec.filter.order},
                 {"half_width_factor", spec.filter.half_width_factor}};
  if (spec.osa) {
    j["osa"] = {{"rbw_nm", spec.osa->rbw_nm},
                {"noise_floor", spec.osa->noise_floor},
                {"rel_noise", spec.osa->rel_noise},
                {"seed", spec.osa->seed}};
  }
  return j.dump(2);
}

Scenario build_scenario(const ScenarioSpec& spec, double t1_c, double beta_rad) {
  const UnitContext units{spec.reference_wavelength_nm};
  units.validate();
  const FbgParams fbg1 = make_fbg(spec.fbg1, units);
  const FbgParams fbg2 = make_fbg(spec.fbg2, units);

  const FrequencyGrid grid = [&] {
    if (spec.grid) {
      return FrequencyGrid(wavelength_to_frequency(spec.grid->center_nm), units.width_nm_to_thz(spec.grid->span_nm),
                           spec.grid->n_points);
    }
    return default_grid(0.5 * (fbg1.center_ref_thz + fbg2.center_ref_thz),
                        0.5 * (fbg1.bandwidth_thz + fbg2.bandwidth_thz));
  }();

  Scenario sc{
      .source = {wavelength_to_frequency(spec.source_center_nm), pulse_bandwidth(spec.source_pulse_fwhm_ps),
                 spec.source_amplitude},
      .fbg1 = fbg1,
      .fbg2 = fbg2,
      .t1_c = t1_c,
      .t2_c = spec.t2_ref_c,
      .tau_ps = spec.tau_ps,
      .phi_rad = spec.phi_rad,
      .lcvr_rad = spec.lcvr_rad,
      .beta_rad = beta_rad,
      .filter = spec.filter,
      .osa = spec.osa,
      .grid = grid,
      .units = units,
  };
  sc.validate();
  return sc;
}

Scenario build_scenario(const ScenarioSpec& spec) {
  const double t1 = spec.t1_c.empty() ? spec.t2_ref_c : spec.t1_c.front();
  return build_scenario(spec, t1, spec.beta_deg.value_or(0.0) * std::numbers::pi / 180.0);
}

}  // namespace wva
