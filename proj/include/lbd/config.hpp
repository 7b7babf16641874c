#pragma once

// Run configuration: an INI-style file with strict key checking, layered with
// environment overrides (LBD_SECTION_KEY) and command-line flags. Dataset
// descriptors (fixture files, domain labels, query terms, cutoffs, semantic
// filters) live in a built-in registry keyed by dataset name.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lbd/date.hpp"
#include "lbd/textprep.hpp"

namespace lbd::config {

struct DatasetSpec {
  std::string key;
  std::string corpus_file;  // under data_dir
  std::string label_c, label_a;
  std::vector<std::string> query_terms_c, query_terms_a;
  Date cutoff;
  textprep::Fields fields = textprep::Fields::title_only;
  bool terms_from_headings = false;  // corpus statistics over MeSH headings
  std::string mesh_map_file;         // under data_dir; empty = no semantic map
  std::string citations_file;        // under data_dir; empty = no citation fixture
  std::vector<std::string> open_filter_types;      // concept-bridge semantic types
  std::vector<std::string> rajolink_filter_types;  // rare-term semantic types
  std::vector<std::string> excluded_headings;      // never expansion candidates
  std::size_t open_picks = 3;  // bridge concepts drilled in open discovery
  std::size_t ra_picks = 3;    // rare terms drilled before the joint step
};

const DatasetSpec* find_dataset(const std::string& key);
std::vector<std::string> dataset_keys();

struct RunConfig {
  std::string dataset;
  std::string data_dir;      // empty: <resource_dir>/data
  std::string resource_dir;  // default: compiled-in resource tree
  std::string out_dir = "out";
  std::uint64_t seed = 42;
  unsigned threads = 1;

  int ngram_max = 2;
  int min_support = 2;
  bool stemming = true;

  // (heuristic, weight) pairs; empty = every heuristic at weight 1.
  std::vector<std::pair<std::string, double>> heuristic_weights;

  std::uint32_t clusters = 2;
  std::uint32_t min_term_df = 5;

  std::size_t test_size = 1000;

  std::string choices_file;
  bool interactive = false;

  // Paths resolved against the directories above.
  std::string resolved_data_dir() const;
  std::string corpus_path(const DatasetSpec& ds) const;
  std::string mesh_map_path(const DatasetSpec& ds) const;
  std::string citations_path(const DatasetSpec& ds) const;
  std::string snapshot_path(const std::string& term) const;  // <data_dir>/<slug>.psv.gz
  std::string gold_dir() const;
  std::string stopwords_path() const;
  std::string stem_exceptions_path() const;
};

// "Calcium Channels" -> "calcium-channels": lowercase, runs of non-alphanumerics
// collapse to single dashes, no leading/trailing dash.
std::string term_slug(const std::string& term);

struct Finding {
  std::string field;  // "section.key", or a path for file-level problems
  std::string message;
};

struct LoadReport {
  RunConfig config;
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

// Parses `text`, collecting field-level findings instead of throwing.
// Unknown sections and keys are findings; so are unparsable values.
LoadReport parse_text(const std::string& text, const std::string& origin);

// parse_text over a file; a missing file is itself a finding.
LoadReport parse_file(const std::string& path);

// LBD_SECTION_KEY environment overrides, applied on top of `config`.
void apply_env(RunConfig& config, std::vector<Finding>& findings);

// File + environment; throws ConfigError listing every finding.
RunConfig load(const std::string& path);

// Defaults + environment only (no file).
RunConfig load_defaults();

// Full set of findings for `config` resolved against the dataset registry and
// the filesystem: unknown dataset, missing fixture and resource files.
std::vector<Finding> validate(const RunConfig& config);

// Stable digest over everything that shapes the outputs (out_dir excluded).
std::string config_fingerprint(const RunConfig& config);

}  // namespace lbd::config
