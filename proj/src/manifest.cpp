#include "lbd/manifest.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>

#include "lbd/gzio.hpp"
#include "lbd/hash.hpp"

namespace lbd::manifest {

namespace {

constexpr const char* kToolName = "lbd";
constexpr const char* kToolVersion = "0.1.0";

}  // namespace

std::string timestamp() {
  std::time_t now;
  if (const char* epoch = std::getenv("LBD_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    now = (end != epoch && *end == '\0') ? static_cast<std::time_t>(v) : std::time(nullptr);
  } else {
    now = std::time(nullptr);
  }
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm_utc.tm_year + 1900,
                tm_utc.tm_mon + 1, tm_utc.tm_mday, tm_utc.tm_hour, tm_utc.tm_min,
                tm_utc.tm_sec);
  return buf;
}

nlohmann::json base(const std::string& command, const config::RunConfig& config) {
  nlohmann::json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["dataset"] = config.dataset;
  doc["seed"] = config.seed;
  doc["threads"] = config.threads;
  doc["config_fingerprint"] = config::config_fingerprint(config);
  doc["generated_at"] = timestamp();
  doc["inputs"] = nlohmann::json::object();
  doc["outputs"] = nlohmann::json::object();
  doc["stats"] = nlohmann::json::object();
  return doc;
}

void add_input(nlohmann::json& doc, const std::string& label, const std::string& path) {
  doc["inputs"][label] = {{"path", path}, {"fnv64", hex64(hash_file(path))}};
}

void add_output(nlohmann::json& doc, const std::string& label,
                const std::string& relative_name, const std::string& absolute_path) {
  doc["outputs"][label] = {{"file", relative_name},
                           {"fnv64", hex64(hash_file(absolute_path))}};
}

void write(nlohmann::json doc, const std::string& path, const std::string& error) {
  doc["status"] = error.empty() ? "success" : "failed";
  if (!error.empty()) doc["error"] = error;
  lbd::write_file(path, doc.dump(2) + "\n");
}

}  // namespace lbd::manifest
