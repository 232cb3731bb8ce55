#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wva::cli {

struct RunManifest {
  std::string tool;
  std::string version;
  std::string command;
  nlohmann::json options;   // resolved
  nlohmann::json config;    // resolved scenario
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;
  std::string timestamp;    // UTC, ISO 8601
  std::optional<std::string> replayed_from;
};

std::string utc_timestamp();

void write_manifest(const RunManifest& m, const std::filesystem::path& path);

/// Throws ConfigError naming the missing or malformed field.
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace wva::cli
