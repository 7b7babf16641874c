#pragma once

// Closed discovery across a domain pair: the bridging candidates are the
// vocabulary terms that occur on both sides, ranked by how strongly the
// weaker side supports them.

#include <string>
#include <vector>

#include "lbd/corpus.hpp"
#include "lbd/ranking.hpp"
#include "lbd/textprep.hpp"

namespace lbd::closed_abc {

struct ClosedResult {
  ranking::RankedList b_terms;  // min(df_a, df_c) descending, key ascending
  std::vector<std::string> gold_found;   // gold terms present among candidates
  std::vector<std::string> gold_missed;  // gold terms absent from candidates

  std::size_t candidate_count() const { return b_terms.items.size(); }
};

// Candidates: df_a > 0 and df_c > 0. gold may be null (no recall bookkeeping).
ClosedResult run(const textprep::TermVocabulary& vocab,
                 const corpus::GoldStandard* gold = nullptr);

}  // namespace lbd::closed_abc
