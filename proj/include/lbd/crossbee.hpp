#pragma once

// Ensemble ranking of bridging-term candidates. Each base heuristic maps a
// candidate's corpus statistics to a score; the ensemble combines the
// normalized ranks of the base lists with per-heuristic weights.

#include <functional>
#include <string>
#include <vector>

#include "lbd/ranking.hpp"
#include "lbd/textprep.hpp"

namespace lbd::crossbee {

struct Heuristic {
  std::string name;
  std::function<double(const textprep::TermStats&)> score;
};

// freqTerm = min(tf_a, tf_c); freqDoc = min(df_a, df_c);
// freqRatio = min(df_a, df_c) / max(df_a, df_c).
std::vector<Heuristic> default_heuristics();

struct EnsembleConfig {
  // (heuristic name, weight); empty means every default heuristic at 1.0.
  std::vector<std::pair<std::string, double>> weights;
};

struct CrossbeeResult {
  std::vector<ranking::RankedList> base;  // one per heuristic, score descending
  ranking::RankedList ensemble;
};

// Candidates are the vocabulary terms with df_a > 0 and df_c > 0. Ensemble
// score: sum_i w_i * (1 - (rank_i - 1) / (n - 1)) with average ranks over
// score ties; a single candidate scores the weight total. Unknown heuristic
// names in the config raise ConfigError.
CrossbeeResult run(const textprep::TermVocabulary& vocab,
                   const EnsembleConfig& config = {});

}  // namespace lbd::crossbee
