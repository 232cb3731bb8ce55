#include "wva/cli/app.hpp"

#include <deque>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "manifest.hpp"
#include "wva/cli/commands.hpp"
#include "wva/error.hpp"

namespace wva::cli {

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitDetection = 4;

// Binds subcommand flags to storage and collects the ones actually given as a
// JSON options object.
class OptionSet {
 public:
  explicit OptionSet(CLI::App* sub) : sub_(sub) {}

  void number(const std::string& flag, const std::string& key, const std::string& help, bool required = false) {
    auto& slot = numbers_.emplace_back();
    CLI::Option* o = sub_->add_option(flag, slot, help);
    if (required) o->required();
    collect_.push_back([o, key, &slot](json& j) {
      if (o->count() > 0) j[key] = slot;
    });
  }

  void list(const std::string& flag, const std::string& key, const std::string& help) {
    auto& slot = lists_.emplace_back();
    CLI::Option* o = sub_->add_option(flag, slot, help)->delimiter(',');
    collect_.push_back([o, key, &slot](json& j) {
      if (o->count() > 0) j[key] = slot;
    });
  }

  void text(const std::string& flag, const std::string& key, const std::string& help, bool required = false) {
    auto& slot = texts_.emplace_back();
    CLI::Option* o = sub_->add_option(flag, slot, help);
    if (required) o->required();
    collect_.push_back([o, key, &slot](json& j) {
      if (o->count() > 0) j[key] = slot;
    });
  }

  json collect() const {
    json j = json::object();
    for (const auto& f : collect_) f(j);
    return j;
  }

  CLI::App* app() const { return sub_; }

 private:
  CLI::App* sub_;
  std::deque<double> numbers_;
  std::deque<std::vector<double>> lists_;
  std::deque<std::string> texts_;
  std::vector<std::function<void(json&)>> collect_;
};

void add_sweep_flags(OptionSet& s) {
  s.number("--beta-min", "beta_min_deg", "first post-selection angle [deg]");
  s.number("--beta-max", "beta_max_deg", "last post-selection angle [deg]");
  s.number("--beta-step", "beta_step_deg", "angle step [deg], > 0");
}

std::optional<std::uint64_t> effective_seed(const ScenarioSpec& spec, std::optional<std::uint64_t> given) {
  if (spec.osa) return spec.osa->seed;
  return given;
}

std::vector<std::string> run_and_record(const std::string& command, const json& options, ScenarioSpec spec,
                                        const std::filesystem::path& out_dir, std::optional<std::uint64_t> seed,
                                        std::optional<std::string> replayed_from, std::ostream& out,
                                        std::ostream& err) {
  const json resolved = resolve_options(command, options, spec);
  const Context ctx{spec, out_dir, out, err};
  RunManifest m;
  m.outputs = execute(command, resolved, ctx);
  m.tool = "wva-sense";
  m.version = std::string(tool_version());
  m.command = command;
  m.options = resolved;
  m.config = json::parse(to_json(spec));
  m.seed = effective_seed(spec, seed);
  m.timestamp = utc_timestamp();
  m.replayed_from = std::move(replayed_from);
  write_manifest(m, out_dir / "manifest.json");
  return m.outputs;
}

int dispatch(const std::string& command, const json& options, const std::string& config_path,
             const std::string& out_dir, std::optional<std::uint64_t> seed, const std::string& manifest_path,
             std::ostream& out, std::ostream& err) {
  if (command == "replay") {
    const RunManifest m = read_manifest(manifest_path);
    if (!is_command(m.command)) throw ConfigError("/command", "unknown command '" + m.command + "'");
    if (!config_path.empty() || seed) err << "warning: --config/--seed are ignored by replay\n";
    const ScenarioSpec spec = parse_scenario_spec(m.config.dump());
    run_and_record(m.command, m.options, spec, out_dir, m.seed,
                   std::filesystem::absolute(manifest_path).lexically_normal().string(), out, err);
    out << "replay: " << m.command << " -> " << out_dir << '\n';
    return 0;
  }

  ScenarioSpec spec = config_path.empty() ? parse_scenario_spec("{}") : load_scenario_spec(config_path);
  if (seed && spec.osa) spec.osa->seed = *seed;
  run_and_record(command, options, spec, out_dir, seed, std::nullopt, out, err);
  return 0;
}

}  // namespace

std::string_view tool_version() noexcept { return WVA_SENSE_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulation and calibration tool for weak-value amplified FBG temperature sensing", "wva-sense"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "scenario JSON file (defaults apply when omitted)");
  app.add_option("--out", out_dir, "output directory (created if missing)")->capture_default_str();
  app.add_option("--seed", seed, "override the OSA noise seed");

  std::deque<OptionSet> sets;
  const auto sub = [&](const char* name, const char* help) -> OptionSet& {
    return sets.emplace_back(app.add_subcommand(name, help));
  };

  auto& sweep_beta = sub("sweep-beta", "centroid shift, A, power and SNR versus post-selection angle");
  add_sweep_flags(sweep_beta);
  sweep_beta.number("--dt", "dt_c", "temperature difference t1 - t2 [degC]");
  sweep_beta.list("--dump-spectra", "dump_spectra_deg", "angles [deg] whose OSA trace is also written");

  auto& sweep_temp = sub("sweep-temp", "centroid shift versus temperature difference, with a linear fit");
  sweep_temp.list("--dt", "dt_c", "temperature differences [degC]");
  sweep_temp.number("--beta", "beta_deg", "post-selection angle [deg]");

  auto& amax = sub("amax-curve", "amplification factor versus angle for several g = gamma cos(delta)");
  amax.list("--g", "g", "g values, each |g| < 1");
  add_sweep_flags(amax);

  auto& theory = sub("theory-lines", "ideal shift lines (A + 1)/2 * kappa * dt");
  theory.list("--a", "a", "amplification factors");
  theory.list("--beta", "beta_deg", "extra lines from angles [deg] mapped through A(beta, g)");
  theory.number("--g", "g", "g used with --beta");
  theory.number("--dt-min", "dt_min_c", "first temperature difference [degC]");
  theory.number("--dt-max", "dt_max_c", "last temperature difference [degC]");
  theory.number("--dt-step", "dt_step_c", "temperature step [degC]");
  theory.number("--kappa", "kappa_nm_per_c", "thermal sensitivity [nm/degC]");

  auto& calibrate = sub("calibrate", "least-squares sensitivity fit of a (dt_c, shift_nm) CSV");
  calibrate.text("--input", "input", "measured CSV", true);

  auto& dump = sub("dump-spectrum", "raw and filtered OSA trace at one operating point");
  dump.number("--beta", "beta_deg", "post-selection angle [deg]");
  dump.number("--dt", "dt_c", "temperature difference [degC]");

  auto& usable = sub("max-usable", "largest amplification whose trace clears an SNR floor");
  usable.number("--snr-min-db", "snr_min_db", "SNR floor [dB]", true);
  add_sweep_flags(usable);
  usable.number("--dt", "dt_c", "temperature difference [degC]");

  std::string manifest_path;
  CLI::App* replay = app.add_subcommand("replay", "re-run a command from its manifest.json");
  replay->add_option("--manifest", manifest_path, "manifest.json of an earlier run")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitConfig;
  }

  std::string command;
  json options = json::object();
  if (replay->parsed()) {
    command = "replay";
  } else {
    for (const auto& s : sets) {
      if (s.app()->parsed()) {
        command = s.app()->get_name();
        options = s.collect();
      }
    }
  }

  try {
    return dispatch(command, options, config_path, out_dir, seed, manifest_path, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DegenerateFit& e) {
    err << "degenerate fit: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnboundedAmplification& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitConfig;
  } catch (const SingularPostSelection& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NoSignal& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DetectionLimited& e) {
    err << "detection limited: " << e.what() << '\n';
    return kExitDetection;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wva::cli
