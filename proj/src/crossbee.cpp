#include "lbd/crossbee.hpp"

#include <algorithm>
#include <unordered_map>

#include "lbd/errors.hpp"

namespace lbd::crossbee {

std::vector<Heuristic> default_heuristics() {
  return {
      {"freqTerm",
       [](const textprep::TermStats& s) {
         return static_cast<double>(std::min(s.tf_a, s.tf_c));
       }},
      {"freqDoc",
       [](const textprep::TermStats& s) {
         return static_cast<double>(std::min(s.df_a, s.df_c));
       }},
      {"freqRatio",
       [](const textprep::TermStats& s) {
         return static_cast<double>(std::min(s.df_a, s.df_c)) /
                static_cast<double>(std::max(s.df_a, s.df_c));
       }},
  };
}

CrossbeeResult run(const textprep::TermVocabulary& vocab, const EnsembleConfig& config) {
  auto heuristics = default_heuristics();
  std::vector<std::pair<std::size_t, double>> picks;  // (heuristic index, weight)
  if (config.weights.empty()) {
    for (std::size_t i = 0; i < heuristics.size(); ++i) picks.emplace_back(i, 1.0);
  } else {
    for (const auto& [name, weight] : config.weights) {
      auto it = std::find_if(heuristics.begin(), heuristics.end(),
                             [&](const Heuristic& h) { return h.name == name; });
      if (it == heuristics.end()) throw ConfigError("unknown heuristic '" + name + "'");
      picks.emplace_back(static_cast<std::size_t>(it - heuristics.begin()), weight);
    }
  }

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < vocab.terms.size(); ++i)
    if (vocab.stats[i].df_a > 0 && vocab.stats[i].df_c > 0) candidates.push_back(i);

  CrossbeeResult result;
  const std::size_t n = candidates.size();
  std::unordered_map<std::string, double> ensemble;
  ensemble.reserve(n);
  for (auto vi : candidates) ensemble.emplace(vocab.terms[vi], 0.0);

  for (const auto& [hi, weight] : picks) {
    ranking::RankedList list;
    list.name = heuristics[hi].name;
    list.items.reserve(n);
    for (auto vi : candidates)
      list.items.push_back({vocab.terms[vi], heuristics[hi].score(vocab.stats[vi])});
    ranking::sort_descending(list.items);
    const auto ranks = ranking::average_ranks(list.items);
    for (std::size_t i = 0; i < list.items.size(); ++i) {
      const double normalized =
          n > 1 ? 1.0 - (ranks[i] - 1.0) / (static_cast<double>(n) - 1.0) : 1.0;
      ensemble[list.items[i].key] += weight * normalized;
    }
    result.base.push_back(std::move(list));
  }

  result.ensemble.name = "ensemble";
  result.ensemble.items.reserve(n);
  for (auto vi : candidates)
    result.ensemble.items.push_back({vocab.terms[vi], ensemble[vocab.terms[vi]]});
  ranking::sort_descending(result.ensemble.items);
  return result;
}

}  // namespace lbd::crossbee
