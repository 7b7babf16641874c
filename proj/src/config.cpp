#include "lbd/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "lbd/crossbee.hpp"
#include "lbd/errors.hpp"
#include "lbd/gzio.hpp"
#include "lbd/hash.hpp"

#ifndef LBD_RESOURCE_DIR
#define LBD_RESOURCE_DIR "resources"
#endif

namespace lbd::config {

namespace {

std::vector<DatasetSpec> make_registry() {
  std::vector<DatasetSpec> r;
  {
    DatasetSpec ds;
    ds.key = "rs-dfo";
    ds.corpus_file = "swanson_1986.psv.gz";
    ds.label_c = "raynaud disease";
    ds.label_a = "fish oil";
    ds.query_terms_c = {"raynaud"};
    ds.query_terms_a = {"fish oil"};
    ds.cutoff = {1985, 11, 30};
    ds.fields = textprep::Fields::title_only;
    ds.citations_file = "rs-dfo.citations.psv.gz";
    r.push_back(std::move(ds));
  }
  {
    DatasetSpec ds;
    ds.key = "mig-mg";
    ds.corpus_file = "swanson_1988.psv.gz";
    ds.label_c = "migraine";
    ds.label_a = "magnesium";
    ds.query_terms_c = {"migraine"};
    ds.query_terms_a = {"magnesium"};
    ds.cutoff = {1987, 12, 31};
    ds.fields = textprep::Fields::title_only;
    ds.terms_from_headings = true;
    ds.mesh_map_file = "mig-mg.mesh.psv.gz";
    ds.open_filter_types = {"Amino Acid, Peptide, or Protein", "Pathologic Function",
                            "Phenomenon or Process", "Element, Ion, or Isotope"};
    ds.excluded_headings = {"Migraine"};
    r.push_back(std::move(ds));
  }
  {
    DatasetSpec ds;
    ds.key = "aut-can";
    ds.corpus_file = "petric_2009.psv.gz";
    ds.label_c = "autism";
    ds.label_a = "calcineurin";
    ds.query_terms_c = {"autism"};
    ds.query_terms_a = {"calcineurin"};
    ds.cutoff = {2007, 12, 31};
    ds.fields = textprep::Fields::title_and_abstract;
    ds.mesh_map_file = "aut-can.mesh.psv.gz";
    ds.rajolink_filter_types = {"Enzymes and Coenzymes",
                                "Amino Acids, Peptides, and Proteins"};
    r.push_back(std::move(ds));
  }
  return r;
}

const std::vector<DatasetSpec>& registry() {
  static const std::vector<DatasetSpec> r = make_registry();
  return r;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::uint64_t> parse_u64(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (v > (UINT64_MAX - digit) / 10) return std::nullopt;
    v = v * 10 + digit;
  }
  return v;
}

std::optional<bool> parse_bool(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  return std::nullopt;
}

std::vector<std::string> heuristic_names() {
  std::vector<std::string> names;
  for (const auto& h : crossbee::default_heuristics()) names.push_back(h.name);
  return names;
}

// name:weight pairs, comma separated. Returns an error message or "".
std::string parse_weights(const std::string& value,
                          std::vector<std::pair<std::string, double>>& out) {
  out.clear();
  const auto known = heuristic_names();
  std::stringstream ss(value);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string::npos)
      return "expected name:weight, got '" + part + "'";
    std::string name = trim(part.substr(0, colon));
    std::string num = trim(part.substr(colon + 1));
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      std::string msg = "unknown heuristic '" + name + "' (known:";
      for (const auto& k : known) msg += " " + k;
      return msg + ")";
    }
    char* end = nullptr;
    const double w = std::strtod(num.c_str(), &end);
    if (end == num.c_str() || *end != '\0' || w < 0.0)
      return "weight for '" + name + "' must be a non-negative number, got '" + num + "'";
    for (const auto& [n, _] : out)
      if (n == name) return "heuristic '" + name + "' appears twice";
    out.emplace_back(name, w);
  }
  if (out.empty()) return "no name:weight pairs given";
  return "";
}

struct KeySpec {
  const char* section;
  const char* key;
  // Returns an error message, or "" on success.
  std::function<std::string(RunConfig&, const std::string&)> set;
};

std::string set_count(const std::string& value, std::uint64_t min, std::uint64_t max,
                      const std::function<void(std::uint64_t)>& apply) {
  auto v = parse_u64(value);
  if (!v) return "expected a non-negative integer, got '" + value + "'";
  if (*v < min || *v > max)
    return "must be between " + std::to_string(min) + " and " + std::to_string(max) +
           ", got '" + value + "'";
  apply(*v);
  return "";
}

const std::vector<KeySpec>& key_specs() {
  static const std::vector<KeySpec> specs = {
      {"run", "dataset",
       [](RunConfig& c, const std::string& v) {
         c.dataset = v;
         return std::string();
       }},
      {"run", "data_dir",
       [](RunConfig& c, const std::string& v) {
         c.data_dir = v;
         return std::string();
       }},
      {"run", "resource_dir",
       [](RunConfig& c, const std::string& v) {
         c.resource_dir = v;
         return std::string();
       }},
      {"run", "out_dir",
       [](RunConfig& c, const std::string& v) {
         c.out_dir = v;
         return std::string();
       }},
      {"run", "seed",
       [](RunConfig& c, const std::string& v) {
         auto n = parse_u64(v);
         if (!n) return std::string("expected a non-negative integer, got '" + v + "'");
         c.seed = *n;
         return std::string();
       }},
      {"run", "threads",
       [](RunConfig& c, const std::string& v) {
         return set_count(v, 1, 4096, [&](std::uint64_t n) {
           c.threads = static_cast<unsigned>(n);
         });
       }},
      {"textprep", "ngram_max",
       [](RunConfig& c, const std::string& v) {
         return set_count(v, 1, 5, [&](std::uint64_t n) {
           c.ngram_max = static_cast<int>(n);
         });
       }},
      {"textprep", "min_support",
       [](RunConfig& c, const std::string& v) {
         return set_count(v, 1, 1u << 30, [&](std::uint64_t n) {
           c.min_support = static_cast<int>(n);
         });
       }},
      {"textprep", "stemming",
       [](RunConfig& c, const std::string& v) {
         auto b = parse_bool(v);
         if (!b) return std::string("expected true/false, got '" + v + "'");
         c.stemming = *b;
         return std::string();
       }},
      {"crossbee", "weights",
       [](RunConfig& c, const std::string& v) {
         return parse_weights(v, c.heuristic_weights);
       }},
      {"outlier", "clusters",
       [](RunConfig& c, const std::string& v) {
         return set_count(v, 1, 64, [&](std::uint64_t n) {
           c.clusters = static_cast<std::uint32_t>(n);
         });
       }},
      {"outlier", "min_term_df",
       [](RunConfig& c, const std::string& v) {
         return set_count(v, 1, 1u << 30, [&](std::uint64_t n) {
           c.min_term_df = static_cast<std::uint32_t>(n);
         });
       }},
      {"linkpred", "test_size",
       [](RunConfig& c, const std::string& v) {
         return set_count(v, 1, 1u << 30, [&](std::uint64_t n) {
           c.test_size = static_cast<std::size_t>(n);
         });
       }},
      {"choices", "file",
       [](RunConfig& c, const std::string& v) {
         c.choices_file = v;
         return std::string();
       }},
      {"choices", "interactive",
       [](RunConfig& c, const std::string& v) {
         auto b = parse_bool(v);
         if (!b) return std::string("expected true/false, got '" + v + "'");
         c.interactive = *b;
         return std::string();
       }},
  };
  return specs;
}

std::string env_name(const KeySpec& spec) {
  std::string name = "LBD_";
  for (const char* p = spec.section; *p; ++p)
    name += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
  name += '_';
  for (const char* p = spec.key; *p; ++p)
    name += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
  return name;
}

std::string join_path(const std::string& dir, const std::string& file) {
  if (dir.empty()) return file;
  if (dir.back() == '/') return dir + file;
  return dir + "/" + file;
}

}  // namespace

const DatasetSpec* find_dataset(const std::string& key) {
  for (const auto& ds : registry())
    if (ds.key == key) return &ds;
  return nullptr;
}

std::vector<std::string> dataset_keys() {
  std::vector<std::string> keys;
  for (const auto& ds : registry()) keys.push_back(ds.key);
  return keys;
}

std::string RunConfig::resolved_data_dir() const {
  return data_dir.empty() ? join_path(resource_dir, "data") : data_dir;
}

std::string RunConfig::corpus_path(const DatasetSpec& ds) const {
  return join_path(resolved_data_dir(), ds.corpus_file);
}

std::string RunConfig::mesh_map_path(const DatasetSpec& ds) const {
  return join_path(resolved_data_dir(), ds.mesh_map_file);
}

std::string RunConfig::citations_path(const DatasetSpec& ds) const {
  return join_path(resolved_data_dir(), ds.citations_file);
}

std::string RunConfig::snapshot_path(const std::string& term) const {
  return join_path(resolved_data_dir(), term_slug(term) + ".psv.gz");
}

std::string RunConfig::gold_dir() const { return join_path(resource_dir, "gold"); }

std::string RunConfig::stopwords_path() const {
  return join_path(resource_dir, "stopwords_en.txt");
}

std::string RunConfig::stem_exceptions_path() const {
  return join_path(resource_dir, "stem_exceptions.txt");
}

std::string term_slug(const std::string& term) {
  std::string slug;
  bool pending_dash = false;
  for (char c : term) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      if (pending_dash && !slug.empty()) slug += '-';
      pending_dash = false;
      slug += static_cast<char>(std::tolower(u));
    } else {
      pending_dash = true;
    }
  }
  return slug;
}

LoadReport parse_text(const std::string& text, const std::string& origin) {
  LoadReport report;
  report.config.resource_dir = LBD_RESOURCE_DIR;

  std::istringstream in(text);
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  auto known_section = [](const std::string& s) {
    for (const auto& spec : key_specs())
      if (s == spec.section) return true;
    return false;
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        report.findings.push_back({origin + ":" + std::to_string(line_no),
                                   "unterminated section header '" + line + "'"});
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (!known_section(section)) {
        std::string known = "run textprep crossbee outlier linkpred choices";
        report.findings.push_back(
            {section, "unknown section (known: " + known + ")"});
        section.clear();  // swallow its keys; the section is already reported
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      report.findings.push_back({origin + ":" + std::to_string(line_no),
                                 "expected key = value, got '" + line + "'"});
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) continue;  // keys of an unknown/absent section
    const KeySpec* match = nullptr;
    bool key_exists_elsewhere = false;
    for (const auto& spec : key_specs()) {
      if (spec.key == key && spec.section != section) key_exists_elsewhere = true;
      if (spec.section == section && spec.key == key) match = &spec;
    }
    if (!match) {
      std::string msg = "unknown key";
      if (key_exists_elsewhere) {
        for (const auto& spec : key_specs())
          if (spec.key == key) msg += "; did you mean [" + std::string(spec.section) + "] " + key;
      }
      report.findings.push_back({section + "." + key, msg});
      continue;
    }
    const std::string err = match->set(report.config, value);
    if (!err.empty()) report.findings.push_back({section + "." + key, err});
  }
  return report;
}

LoadReport parse_file(const std::string& path) {
  if (!file_exists(path)) {
    LoadReport report;
    report.config.resource_dir = LBD_RESOURCE_DIR;
    report.findings.push_back({path, "config file not found"});
    return report;
  }
  return parse_text(read_file(path), path);
}

void apply_env(RunConfig& config, std::vector<Finding>& findings) {
  for (const auto& spec : key_specs()) {
    const std::string name = env_name(spec);
    const char* value = std::getenv(name.c_str());
    if (!value) continue;
    const std::string err = spec.set(config, value);
    if (!err.empty())
      findings.push_back({std::string(spec.section) + "." + spec.key,
                          err + " (from " + name + ")"});
  }
}

RunConfig load(const std::string& path) {
  LoadReport report = parse_file(path);
  apply_env(report.config, report.findings);
  if (!report.ok()) {
    std::string msg = "invalid configuration:";
    for (const auto& f : report.findings) msg += "\n  " + f.field + ": " + f.message;
    throw ConfigError(msg);
  }
  return report.config;
}

RunConfig load_defaults() {
  RunConfig config;
  config.resource_dir = LBD_RESOURCE_DIR;
  std::vector<Finding> findings;
  apply_env(config, findings);
  if (!findings.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& f : findings) msg += "\n  " + f.field + ": " + f.message;
    throw ConfigError(msg);
  }
  return config;
}

std::vector<Finding> validate(const RunConfig& config) {
  std::vector<Finding> findings;
  const DatasetSpec* ds = find_dataset(config.dataset);
  if (config.dataset.empty()) {
    findings.push_back({"run.dataset", "no dataset selected"});
  } else if (!ds) {
    std::string msg = "unknown dataset '" + config.dataset + "' (known:";
    for (const auto& k : dataset_keys()) msg += " " + k;
    findings.push_back({"run.dataset", msg + ")"});
  }
  auto need_file = [&](const std::string& path, const std::string& what) {
    if (!file_exists(path))
      findings.push_back({path, what + " not found"});
  };
  if (ds) {
    need_file(config.corpus_path(*ds), "corpus fixture");
    if (!ds->mesh_map_file.empty())
      need_file(config.mesh_map_path(*ds), "semantic-type map");
    if (!ds->citations_file.empty())
      need_file(config.citations_path(*ds), "citation fixture");
    need_file(join_path(config.gold_dir(), config.dataset + ".gold.txt"),
              "gold-standard list");
  }
  need_file(config.stopwords_path(), "stopword list");
  need_file(config.stem_exceptions_path(), "stemming exception list");
  if (!config.choices_file.empty()) {
    need_file(config.choices_file, "choice file");
    if (config.interactive)
      findings.push_back(
          {"choices.interactive", "replay file and interactive mode are mutually exclusive"});
  }
  return findings;
}

std::string config_fingerprint(const RunConfig& config) {
  std::ostringstream out;
  out << "dataset=" << config.dataset << '\n'
      << "seed=" << config.seed << '\n'
      << "ngram_max=" << config.ngram_max << '\n'
      << "min_support=" << config.min_support << '\n'
      << "stemming=" << (config.stemming ? 1 : 0) << '\n';
  out << "weights=";
  for (const auto& [name, w] : config.heuristic_weights) out << name << ':' << w << ',';
  out << '\n'
      << "clusters=" << config.clusters << '\n'
      << "min_term_df=" << config.min_term_df << '\n'
      << "test_size=" << config.test_size << '\n';
  return hex64(fnv1a64(out.str()));
}

}  // namespace lbd::config
