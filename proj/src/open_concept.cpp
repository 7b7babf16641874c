#include "lbd/open_concept.hpp"

#include <algorithm>
#include <map>

#include "lbd/errors.hpp"
#include "lbd/evalkit.hpp"
#include "lbd/gzio.hpp"
#include "lbd/vectorspace.hpp"

namespace lbd::open_concept {

SemanticMap SemanticMap::load(const std::string& path) {
  GzReader reader(path);
  SemanticMap map;
  std::string line;
  std::size_t line_no = 0;
  while (reader.getline(line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    if (bar == std::string::npos)
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected 'heading|type;type'");
    std::string heading = line.substr(0, bar);
    std::vector<std::string> types;
    std::size_t start = bar + 1;
    while (start <= line.size()) {
      std::size_t semi = line.find(';', start);
      std::size_t end = semi == std::string::npos ? line.size() : semi;
      if (end > start) types.push_back(line.substr(start, end - start));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    if (heading.empty() || types.empty())
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected 'heading|type;type'");
    map.types_[std::move(heading)] = std::move(types);
  }
  return map;
}

const std::vector<std::string>* SemanticMap::types_of(const std::string& heading) const {
  auto it = types_.find(heading);
  return it == types_.end() ? nullptr : &it->second;
}

bool SemanticMap::passes(const std::string& heading,
                         const std::vector<std::string>& allowed) const {
  const auto* types = types_of(heading);
  if (!types) return false;
  for (const auto& t : *types)
    if (std::find(allowed.begin(), allowed.end(), t) != allowed.end()) return true;
  return false;
}

std::optional<std::size_t> HeadingStats::find(const std::string& heading) const {
  auto it = std::lower_bound(headings.begin(), headings.end(), heading);
  if (it == headings.end() || *it != heading) return std::nullopt;
  return static_cast<std::size_t>(it - headings.begin());
}

std::size_t HeadingStats::unique_count(corpus::Domain side) const {
  const auto& df = side == corpus::Domain::A ? df_a : df_c;
  return static_cast<std::size_t>(
      std::count_if(df.begin(), df.end(), [](std::uint32_t v) { return v > 0; }));
}

std::size_t HeadingStats::common_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < headings.size(); ++i)
    if (df_a[i] > 0 && df_c[i] > 0) ++n;
  return n;
}

HeadingStats heading_stats(const corpus::DomainPairCorpus& corpus) {
  struct Counts {
    std::uint32_t df_a = 0, df_c = 0, tf_a = 0, tf_c = 0;
  };
  std::map<std::string, Counts> counts;
  for (const auto& doc : corpus.docs) {
    std::map<std::string, std::uint32_t> per_doc;
    for (const auto& h : doc.mesh) ++per_doc[h];
    for (const auto& [h, n] : per_doc) {
      auto& c = counts[h];
      if (doc.domain == corpus::Domain::A) {
        c.df_a += 1;
        c.tf_a += n;
      } else {
        c.df_c += 1;
        c.tf_c += n;
      }
    }
  }
  HeadingStats stats;
  stats.headings.reserve(counts.size());
  for (const auto& [h, c] : counts) {
    stats.headings.push_back(h);
    stats.df_a.push_back(c.df_a);
    stats.df_c.push_back(c.df_c);
    stats.tf_a.push_back(c.tf_a);
    stats.tf_c.push_back(c.tf_c);
  }
  return stats;
}

ranking::RankedList rank_by_df(const HeadingStats& stats, corpus::Domain side) {
  const auto& df = side == corpus::Domain::A ? stats.df_a : stats.df_c;
  ranking::RankedList list;
  list.name = std::string("headings_") + corpus::domain_label(side);
  for (std::size_t i = 0; i < stats.headings.size(); ++i)
    if (df[i] > 0) list.items.push_back({stats.headings[i], static_cast<double>(df[i])});
  ranking::sort_descending(list.items);
  return list;
}

std::vector<ranking::RankedItem> aggregated_heading_tfidf(
    const corpus::DomainPairCorpus& corpus, corpus::Domain side) {
  auto counts = vectorspace::bow_mesh(corpus, side);
  if (counts.n_rows() == 0)
    throw DataError("corpus '" + corpus.name + "' has no documents on side " +
                    corpus::domain_label(side));
  auto weighted = vectorspace::tfidf(counts);
  auto totals = vectorspace::aggregate_rows(weighted);
  std::vector<ranking::RankedItem> items;
  items.reserve(weighted.terms.size());
  for (std::size_t i = 0; i < weighted.terms.size(); ++i)
    items.push_back({weighted.terms[i], totals[i]});
  return items;
}

ranking::RankedList rank_b_concepts(const corpus::DomainPairCorpus& corpus,
                                    corpus::Domain side) {
  ranking::RankedList list;
  list.name = "b_concepts";
  list.items = aggregated_heading_tfidf(corpus, side);
  ranking::sort_descending(list.items);
  return list;
}

ranking::RankedList filter_by_type(const ranking::RankedList& list, const SemanticMap& map,
                                   const std::vector<std::string>& allowed) {
  ranking::RankedList out;
  out.name = list.name + "_filtered";
  for (const auto& item : list.items)
    if (map.passes(item.key, allowed)) out.items.push_back(item);
  return out;
}

ranking::RankedList exclude_keys(const ranking::RankedList& list,
                                 const std::vector<std::string>& keys) {
  ranking::RankedList out;
  out.name = list.name;
  for (const auto& item : list.items)
    if (std::find(keys.begin(), keys.end(), item.key) == keys.end())
      out.items.push_back(item);
  return out;
}

ranking::RankedList snapshot_heading_ranking(const std::vector<corpus::Document>& docs,
                                             const std::string& name) {
  auto counts = vectorspace::bow_mesh_docs(docs);
  if (counts.n_rows() == 0) throw DataError("snapshot '" + name + "' is empty");
  auto weighted = vectorspace::tfidf(counts);
  auto totals = vectorspace::aggregate_rows(weighted);
  ranking::RankedList list;
  list.name = name;
  list.items.reserve(weighted.terms.size());
  for (std::size_t i = 0; i < weighted.terms.size(); ++i)
    list.items.push_back({weighted.terms[i], totals[i]});
  ranking::sort_descending(list.items);
  return list;
}

std::vector<std::string> intersect_keys(const std::vector<ranking::RankedList>& lists) {
  if (lists.empty()) return {};
  std::map<std::string, std::size_t> seen;
  for (const auto& list : lists)
    for (const auto& item : list.items) ++seen[item.key];
  std::vector<std::string> keys;
  for (const auto& [key, n] : seen)
    if (n == lists.size()) keys.push_back(key);
  return keys;
}

ranking::RankedList restrict_to(const ranking::RankedList& list,
                                const std::vector<std::string>& keys) {
  ranking::RankedList out;
  out.name = list.name;
  for (const auto& item : list.items)
    if (std::find(keys.begin(), keys.end(), item.key) != keys.end())
      out.items.push_back(item);
  return out;
}

std::vector<TargetConcept> fuse_targets(const std::vector<ranking::RankedList>& drilldowns,
                                        const HeadingStats& source_stats) {
  auto shared = intersect_keys(drilldowns);
  if (shared.empty()) return {};
  std::vector<ranking::RankedList> restricted;
  restricted.reserve(drilldowns.size());
  for (const auto& list : drilldowns) restricted.push_back(restrict_to(list, shared));
  auto fused = evalkit::borda_fuse(restricted, "targets");
  std::vector<TargetConcept> targets;
  targets.reserve(fused.items.size());
  for (const auto& item : fused.items) {
    TargetConcept t;
    t.heading = item.key;
    t.fused_score = item.score;
    if (auto idx = source_stats.find(item.key)) t.source_df = source_stats.df_c[*idx];
    targets.push_back(std::move(t));
  }
  return targets;
}

}  // namespace lbd::open_concept
