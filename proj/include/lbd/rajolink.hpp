#pragma once

// Rare-term drill-down discovery. Ra: the rarest interesting concepts of the
// problem literature. Jo: terms joining all of the chosen rare literatures.
// Link: bridging terms that connect the problem domain to the chosen target.

#include <string>
#include <vector>

#include "lbd/corpus.hpp"
#include "lbd/open_concept.hpp"
#include "lbd/ranking.hpp"
#include "lbd/textprep.hpp"

namespace lbd::rajolink {

// Headings of the problem-domain (C) side ranked by aggregated TF-IDF,
// ascending (rarest first), then filtered to the allowed semantic types.
ranking::RankedList ra_ranking(const corpus::DomainPairCorpus& corpus,
                               const open_concept::SemanticMap& map,
                               const std::vector<std::string>& filter_types);

// Terms occurring in every snapshot, scored by aggregated TF-IDF over the
// pooled snapshot documents (tf_total * ln(n_docs / df_total)), descending.
ranking::RankedList jo_ranking(
    const std::vector<std::vector<corpus::Document>>& snapshots,
    const textprep::PreprocessConfig& config);

}  // namespace lbd::rajolink
