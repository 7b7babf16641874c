#pragma once

// Citation-graph link prediction. The training graph keeps the citations to
// works published up to a cutoff; later citations between already-known nodes
// become the positive test pairs, and seeded sampling draws the negatives.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lbd/date.hpp"
#include "lbd/evalkit.hpp"
#include "lbd/rng.hpp"

namespace lbd::linkpred {

struct Citation {
  std::string citing;
  std::string cited;
  Date cited_pub_date;  // publication date of the cited work
};

// "citing_id|cited_id|cited_pub_date" rows (gzip or plain); header required.
std::vector<Citation> load_citations(const std::string& path);

class Graph {
 public:
  // Undirected, deduplicated, self-loops dropped; node ids sorted.
  static Graph build(const std::vector<std::pair<std::string, std::string>>& edges);

  std::optional<std::uint32_t> find(const std::string& id) const;
  const std::string& label(std::uint32_t node) const { return nodes_[node]; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t node) const {
    return adj_[node];
  }
  std::size_t degree(std::uint32_t node) const { return adj_[node].size(); }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;

 private:
  std::vector<std::string> nodes_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::size_t edge_count_ = 0;
};

Graph train_graph(const std::vector<Citation>& rows, const Date& cutoff);

// Two works are linked when some document cites both (within the cutoff).
Graph co_citation_projection(const std::vector<Citation>& rows, const Date& cutoff);

double common_neighbors(const Graph& g, std::uint32_t u, std::uint32_t v);
double jaccard(const Graph& g, std::uint32_t u, std::uint32_t v);  // 0 on empty union
double adamic_adar(const Graph& g, std::uint32_t u, std::uint32_t v);

struct TestPair {
  std::uint32_t u = 0, v = 0;
  bool positive = false;
};

struct EvalSet {
  Graph train;
  std::vector<TestPair> pairs;  // positives first, then sampled negatives
  std::size_t positive_count = 0;
};

// Positives: the first `test_size` post-cutoff citations ordered by
// (cited_pub_date, citing, cited) whose endpoints both exist in the training
// graph, are not already linked there, deduplicated as unordered pairs.
// Negatives: equally many uniform non-edges drawn with `negative_seed`,
// disjoint from the training edges and the positives. Throws when fewer
// candidate negatives exist than positives.
EvalSet build_eval(const std::vector<Citation>& rows, const Date& cutoff,
                   std::size_t test_size, std::uint64_t negative_seed);

struct ScorerEval {
  std::string name;
  double auc = 0.0;
  evalkit::RocCurve roc;
  std::map<std::size_t, double> precision_at;  // k -> precision over top k
};

// Fraction of positives among the k highest-scored pairs (score descending,
// ties by node pair ascending); k is clamped to the pair count.
double precision_at_k(const std::vector<TestPair>& pairs,
                      const std::vector<double>& scores, std::size_t k);

// Runs common-neighbors, Jaccard, and Adamic-Adar over the evaluation pairs,
// reporting AUC, the ROC curve, and precision at each of `ks`.
std::vector<ScorerEval> evaluate(const EvalSet& eval,
                                 const std::vector<std::size_t>& ks = {10, 50, 100});

}  // namespace lbd::linkpred
