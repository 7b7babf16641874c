#pragma once

// Open discovery over controlled-vocabulary concepts. Concepts are MeSH
// headings kept verbatim; a semantic-type map decides which headings are
// plausible bridges or targets, and drill-down literatures for the chosen
// bridges vote on the target concepts.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lbd/corpus.hpp"
#include "lbd/ranking.hpp"

namespace lbd::open_concept {

// heading -> semantic types, loaded from "heading|type;type" rows.
class SemanticMap {
 public:
  static SemanticMap load(const std::string& path);

  const std::vector<std::string>* types_of(const std::string& heading) const;
  bool passes(const std::string& heading, const std::vector<std::string>& allowed) const;
  std::size_t size() const { return types_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> types_;
};

struct HeadingStats {
  // tf counts repeated headings on a document; df counts documents.
  std::vector<std::string> headings;  // sorted, both sides pooled
  std::vector<std::uint32_t> df_a, df_c, tf_a, tf_c;  // aligned with headings

  std::optional<std::size_t> find(const std::string& heading) const;
  std::size_t unique_count(corpus::Domain side) const;
  std::size_t common_count() const;  // headings with df > 0 on both sides
};

HeadingStats heading_stats(const corpus::DomainPairCorpus& corpus);

// One side's headings ranked by document frequency (descending, key asc).
ranking::RankedList rank_by_df(const HeadingStats& stats, corpus::Domain side);

// One side's headings scored by aggregated TF-IDF: the document-heading count
// matrix is TF-IDF weighted and column-summed. Unsorted; callers order it.
std::vector<ranking::RankedItem> aggregated_heading_tfidf(
    const corpus::DomainPairCorpus& corpus, corpus::Domain side);

// Bridge candidates: problem-domain headings by aggregated TF-IDF, descending.
ranking::RankedList rank_b_concepts(const corpus::DomainPairCorpus& corpus,
                                    corpus::Domain side);

// Keep the keys whose semantic types intersect `allowed`; unmapped headings
// never pass. Order is preserved.
ranking::RankedList filter_by_type(const ranking::RankedList& list, const SemanticMap& map,
                                   const std::vector<std::string>& allowed);

// Drop the given keys (the drilled bridge itself, the problem-domain query
// headings). Order is preserved.
ranking::RankedList exclude_keys(const ranking::RankedList& list,
                                 const std::vector<std::string>& keys);

// Aggregated TF-IDF ranking (descending) of a drill-down snapshot's headings.
ranking::RankedList snapshot_heading_ranking(const std::vector<corpus::Document>& docs,
                                             const std::string& name);

// Keys present in every list, ascending.
std::vector<std::string> intersect_keys(const std::vector<ranking::RankedList>& lists);

// The sub-list of `list` covering exactly `keys` (original order kept).
ranking::RankedList restrict_to(const ranking::RankedList& list,
                                const std::vector<std::string>& keys);

struct TargetConcept {
  std::string heading;
  double fused_score = 0.0;      // Borda total over the drill-down rankings
  std::uint32_t source_df = 0;   // df in the problem-domain corpus; 0 = novel
};

// Borda-fuse the drill-down rankings restricted to their shared keys, then
// attach each target's document frequency in the problem domain. An empty
// intersection yields an empty list.
std::vector<TargetConcept> fuse_targets(const std::vector<ranking::RankedList>& drilldowns,
                                        const HeadingStats& source_stats);

}  // namespace lbd::open_concept
