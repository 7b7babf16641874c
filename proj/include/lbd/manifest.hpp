#pragma once

// Run manifests: one JSON document per output directory recording the
// command, configuration digest, seed, input fixture hashes, output artifact
// hashes, per-command statistics, and a status. The generation time is the
// only volatile field, isolated under a single key and overridable through
// the LBD_EPOCH environment variable (seconds since the Unix epoch).

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lbd/config.hpp"

namespace lbd::manifest {

nlohmann::json base(const std::string& command, const config::RunConfig& config);

// Records {"path": ..., "fnv64": ...} under inputs/<label>; hashes the file.
void add_input(nlohmann::json& doc, const std::string& label, const std::string& path);

// Records {"file": <relative>, "fnv64": ...} under outputs/<label>.
void add_output(nlohmann::json& doc, const std::string& label,
                const std::string& relative_name, const std::string& absolute_path);

// Serializes with status "success" (error empty) or "failed" (error kept).
void write(nlohmann::json doc, const std::string& path, const std::string& error = "");

// ISO-8601 UTC; LBD_EPOCH freezes it for reproducible reruns.
std::string timestamp();

}  // namespace lbd::manifest
