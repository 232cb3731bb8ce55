#pragma once

// Subcommand implementations. Each command is driven by a JSON options object;
// resolve_options() fills defaults from the scenario so the resolved object
// (stored in the run manifest) fully determines the outputs.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wva/scenario_config.hpp"

namespace wva::cli {

struct Context {
  ScenarioSpec spec;
  std::filesystem::path out_dir;
  std::ostream& out;
  std::ostream& err;
};

/// Numeric table plus optional '#' footer lines.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> footer;
};

std::string format_csv(const Table& t);

bool is_command(std::string_view name);

nlohmann::json resolve_options(std::string_view command, nlohmann::json options, const ScenarioSpec& spec);

/// Writes the command's files into ctx.out_dir and returns their names.
std::vector<std::string> execute(std::string_view command, const nlohmann::json& resolved, const Context& ctx);

// Table builders behind the CSV commands (resolved options).
Table sweep_beta_table(const nlohmann::json& o, const ScenarioSpec& spec, std::ostream& warn);
Table sweep_temp_table(const nlohmann::json& o, const ScenarioSpec& spec);
Table amax_curve_table(const nlohmann::json& o);
Table amax_peaks_table(const nlohmann::json& o);
Table theory_lines_table(const nlohmann::json& o);

/// (dt_c, shift_nm) rows; '#' lines, blank lines and one leading header are skipped.
std::vector<CalibrationPoint> read_calibration_csv(std::istream& in);

}  // namespace wva::cli
