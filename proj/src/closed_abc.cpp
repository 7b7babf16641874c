#include "lbd/closed_abc.hpp"

#include <algorithm>

namespace lbd::closed_abc {

ClosedResult run(const textprep::TermVocabulary& vocab, const corpus::GoldStandard* gold) {
  ClosedResult result;
  result.b_terms.name = "closed";
  for (std::size_t i = 0; i < vocab.terms.size(); ++i) {
    const auto& st = vocab.stats[i];
    if (st.df_a > 0 && st.df_c > 0)
      result.b_terms.items.push_back(
          {vocab.terms[i], static_cast<double>(std::min(st.df_a, st.df_c))});
  }
  ranking::sort_descending(result.b_terms.items);
  if (gold) {
    for (const auto& g : gold->b_terms) {
      bool found = result.b_terms.position_of(g).has_value();
      (found ? result.gold_found : result.gold_missed).push_back(g);
    }
  }
  return result;
}

}  // namespace lbd::closed_abc
