#pragma once

// Command implementations behind the CLI: each subcommand loads its fixtures,
// runs the corresponding discovery workflow, and commits an output directory
// holding the artifacts plus a manifest. Outputs are staged and only moved
// into place on success, so a failed run leaves nothing behind but a manifest
// marked failed.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lbd/config.hpp"

namespace lbd::pipeline {

struct CliOptions {
  std::string command;
  std::string config_file;  // empty: defaults + environment only
  // Flag-level overrides, applied after file and environment.
  std::string dataset;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string choices_file;
  bool interactive = false;
};

struct Resolved {
  config::RunConfig config;
  std::vector<config::Finding> findings;
};

// Layered configuration: file, then LBD_* environment, then flags. Findings
// accumulate instead of throwing so `validate` can report all of them.
Resolved resolve(const CliOptions& options);

// Runs `options.command`; prompts read from `in`, reports go to `out`.
// Returns the process exit code for non-throwing outcomes; configuration
// errors, missing fixtures, and data errors surface as exceptions.
int run(const CliOptions& options, std::istream& in, std::ostream& out);

}  // namespace lbd::pipeline
