// Command-line front end: one subcommand per workflow, shared flags, and a
// stable exit-code contract (0 ok, 2 bad configuration, 3 missing fixture).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lbd/errors.hpp"
#include "lbd/pipeline.hpp"

namespace {

struct SubcommandDoc {
  const char* name;
  const char* help;
};

constexpr SubcommandDoc kCommands[] = {
    {"ingest", "load a domain pair, build its vocabulary, write corpus stats"},
    {"closed", "rank bridging terms shared by both domains against the gold list"},
    {"crossbee", "ensemble ranking of bridging terms with per-heuristic scores"},
    {"open", "concept-level discovery: filter, drill down, fuse target concepts"},
    {"outlier", "project documents to 2-D and report cross-domain outliers"},
    {"rajolink", "rare-term discovery: rare concepts, joint terms, closing link"},
    {"linkpred", "co-citation link prediction evaluated on a time-sliced network"},
    {"validate", "check configuration and fixtures without writing anything"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"literature-based discovery workflows over domain-pair corpora"};
  app.require_subcommand(1);

  lbd::pipeline::CliOptions options;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  for (const auto& doc : kCommands) {
    CLI::App* sub = app.add_subcommand(doc.name, doc.help);
    sub->add_option("--config", options.config_file, "configuration file (INI)");
    sub->add_option("--dataset", options.dataset, "dataset key");
    sub->add_option("--out", options.out_dir, "output directory");
    sub->add_option("--seed", seed, "random seed")->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", threads, "worker threads");
    sub->add_option("--choices", options.choices_file, "recorded expert choices to replay");
    sub->add_flag("--interactive", options.interactive, "ask for choices on the terminal");
    sub->callback([&options, &seed, &threads, sub, name = std::string(doc.name)] {
      options.command = name;
      if (sub->count("--seed") > 0) options.seed = seed;
      if (sub->count("--threads") > 0) options.threads = threads;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return lbd::pipeline::run(options, std::cin, std::cout);
  } catch (const lbd::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const lbd::FixtureError& e) {
    std::cerr << "missing fixture: " << e.what() << "\n";
    std::cerr << "  path: " << e.path() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
