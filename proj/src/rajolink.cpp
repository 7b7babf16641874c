#include "lbd/rajolink.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "lbd/errors.hpp"
#include "lbd/vectorspace.hpp"

namespace lbd::rajolink {

ranking::RankedList ra_ranking(const corpus::DomainPairCorpus& corpus,
                               const open_concept::SemanticMap& map,
                               const std::vector<std::string>& filter_types) {
  ranking::RankedList list;
  list.name = "ra";
  list.items = open_concept::aggregated_heading_tfidf(corpus, corpus::Domain::C);
  ranking::sort_ascending(list.items);
  return open_concept::filter_by_type(list, map, filter_types);
}

ranking::RankedList jo_ranking(
    const std::vector<std::vector<corpus::Document>>& snapshots,
    const textprep::PreprocessConfig& config) {
  if (snapshots.empty()) throw DataError("no snapshots to join");
  struct Pooled {
    std::size_t snapshots_seen = 0;
    std::uint64_t tf = 0;
    std::uint64_t df = 0;
  };
  std::map<std::string, Pooled> pooled;
  std::size_t n_docs = 0;
  for (const auto& docs : snapshots) {
    n_docs += docs.size();
    std::vector<const corpus::Document*> ptrs;
    ptrs.reserve(docs.size());
    for (const auto& d : docs) ptrs.push_back(&d);
    for (const auto& [term, stats] : textprep::count_terms(ptrs, config)) {
      auto& slot = pooled[term];
      slot.snapshots_seen += 1;
      slot.tf += stats.tf;
      slot.df += stats.df;
    }
  }
  if (n_docs == 0) throw DataError("snapshots hold no documents");
  ranking::RankedList list;
  list.name = "jo";
  for (const auto& [term, slot] : pooled) {
    if (slot.snapshots_seen != snapshots.size()) continue;
    if (slot.df >= n_docs) continue;  // joins everything: zero information
    const double idf = std::log(static_cast<double>(n_docs) / static_cast<double>(slot.df));
    list.items.push_back({term, static_cast<double>(slot.tf) * idf});
  }
  ranking::sort_descending(list.items);
  return list;
}

}  // namespace lbd::rajolink
