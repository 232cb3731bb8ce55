#include "manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "wva/error.hpp"

namespace wva::cli {

using nlohmann::json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
  json j = {{"tool", m.tool},       {"version", m.version}, {"command", m.command},
            {"options", m.options}, {"config", m.config},   {"outputs", m.outputs},
            {"timestamp", m.timestamp}};
  j["seed"] = m.seed ? json(*m.seed) : json(nullptr);
  if (m.replayed_from) j["replayed_from"] = *m.replayed_from;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("/", "cannot open manifest " + path.string());
  std::ostringstream text;
  text << f.rdbuf();
  json j;
  try {
    j = json::parse(text.str());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what(), 0);
  }
  if (!j.is_object()) throw ConfigError("/", "manifest must be an object");
  const auto need = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw ConfigError(std::string("/") + key, "missing from manifest");
    return j.at(key);
  };
  RunManifest m;
  try {
    m.tool = need("tool").get<std::string>();
    m.version = need("version").get<std::string>();
    m.command = need("command").get<std::string>();
    m.options = need("options");
    m.config = need("config");
    if (!need("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
    m.outputs = need("outputs").get<std::vector<std::string>>();
    m.timestamp = need("timestamp").get<std::string>();
  } catch (const json::type_error& e) {
    throw ConfigError("/", std::string("malformed manifest: ") + e.what());
  }
  return m;
}

}  // namespace wva::cli
