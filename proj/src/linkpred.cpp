#include "lbd/linkpred.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lbd/errors.hpp"
#include "lbd/gzio.hpp"

namespace lbd::linkpred {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::vector<Citation> load_citations(const std::string& path) {
  GzReader reader(path);
  std::string line;
  if (!reader.getline(line)) throw DataError("empty citation file: " + path);
  auto header = split(line, '|');
  auto column = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      throw DataError("citation file " + path + " is missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t col_citing = column("citing_id");
  const std::size_t col_cited = column("cited_id");
  const std::size_t col_date = column("cited_pub_date");

  std::vector<Citation> rows;
  std::size_t line_no = 1;
  while (reader.getline(line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split(line, '|');
    if (fields.size() != header.size())
      throw DataError(path + ":" + std::to_string(line_no) + ": malformed row");
    auto date = Date::parse(fields[col_date]);
    if (!date)
      throw DataError(path + ":" + std::to_string(line_no) + ": unparsable date '" +
                      fields[col_date] + "'");
    if (fields[col_citing].empty() || fields[col_cited].empty())
      throw DataError(path + ":" + std::to_string(line_no) + ": empty node id");
    rows.push_back({fields[col_citing], fields[col_cited], *date});
  }
  return rows;
}

Graph Graph::build(const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  std::set<std::string> names;
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    names.insert(a);
    names.insert(b);
  }
  g.nodes_.assign(names.begin(), names.end());
  g.index_.reserve(g.nodes_.size());
  for (std::uint32_t i = 0; i < g.nodes_.size(); ++i) g.index_[g.nodes_[i]] = i;
  g.adj_.resize(g.nodes_.size());
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    std::uint32_t u = g.index_[a], v = g.index_[b];
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

std::optional<std::uint32_t> Graph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto& smaller = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const std::uint32_t target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(smaller.begin(), smaller.end(), target);
}

Graph train_graph(const std::vector<Citation>& rows, const Date& cutoff) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& r : rows)
    if (!(cutoff < r.cited_pub_date)) edges.emplace_back(r.citing, r.cited);
  return Graph::build(edges);
}

Graph co_citation_projection(const std::vector<Citation>& rows, const Date& cutoff) {
  std::map<std::string, std::vector<std::string>> by_citing;
  for (const auto& r : rows)
    if (!(cutoff < r.cited_pub_date)) by_citing[r.citing].push_back(r.cited);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto& [citing, cited] : by_citing) {
    std::sort(cited.begin(), cited.end());
    cited.erase(std::unique(cited.begin(), cited.end()), cited.end());
    for (std::size_t i = 0; i < cited.size(); ++i)
      for (std::size_t j = i + 1; j < cited.size(); ++j)
        edges.emplace_back(cited[i], cited[j]);
  }
  return Graph::build(edges);
}

namespace {

// Calls fn(w) for every common neighbor w of u and v.
template <typename Fn>
void for_common(const Graph& g, std::uint32_t u, std::uint32_t v, Fn&& fn) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      fn(a[i]);
      ++i;
      ++j;
    }
  }
}

}  // namespace

double common_neighbors(const Graph& g, std::uint32_t u, std::uint32_t v) {
  std::size_t n = 0;
  for_common(g, u, v, [&](std::uint32_t) { ++n; });
  return static_cast<double>(n);
}

double jaccard(const Graph& g, std::uint32_t u, std::uint32_t v) {
  std::size_t common = 0;
  for_common(g, u, v, [&](std::uint32_t) { ++common; });
  const std::size_t uni = g.degree(u) + g.degree(v) - common;
  if (uni == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(uni);
}

double adamic_adar(const Graph& g, std::uint32_t u, std::uint32_t v) {
  double s = 0.0;
  for_common(g, u, v, [&](std::uint32_t w) {
    const std::size_t deg = g.degree(w);
    if (deg > 1) s += 1.0 / std::log(static_cast<double>(deg));
  });
  return s;
}

EvalSet build_eval(const std::vector<Citation>& rows, const Date& cutoff,
                   std::size_t test_size, std::uint64_t negative_seed) {
  EvalSet eval;
  eval.train = train_graph(rows, cutoff);
  if (eval.train.node_count() < 2)
    throw DataError("training graph has fewer than two nodes");

  std::vector<const Citation*> future;
  for (const auto& r : rows)
    if (cutoff < r.cited_pub_date) future.push_back(&r);
  std::sort(future.begin(), future.end(), [](const Citation* a, const Citation* b) {
    if (a->cited_pub_date != b->cited_pub_date) return a->cited_pub_date < b->cited_pub_date;
    if (a->citing != b->citing) return a->citing < b->citing;
    return a->cited < b->cited;
  });

  std::set<std::pair<std::uint32_t, std::uint32_t>> used;
  for (const auto* r : future) {
    if (eval.pairs.size() >= test_size) break;
    if (r->citing == r->cited) continue;
    auto u = eval.train.find(r->citing);
    auto v = eval.train.find(r->cited);
    if (!u || !v) continue;  // only pairs the training graph can score
    std::uint32_t a = *u, b = *v;
    if (a > b) std::swap(a, b);
    if (eval.train.has_edge(a, b)) continue;
    if (!used.insert({a, b}).second) continue;
    eval.pairs.push_back({a, b, true});
  }
  eval.positive_count = eval.pairs.size();
  if (eval.positive_count == 0)
    throw DataError("no scorable positive pairs after the cutoff");

  Rng rng(negative_seed);
  const std::uint64_t n = eval.train.node_count();
  const std::uint64_t all_pairs = n * (n - 1) / 2;
  const std::uint64_t taken = eval.train.edge_count() + eval.positive_count;
  if (all_pairs - taken < eval.positive_count)
    throw DataError("not enough unlinked node pairs to sample negatives from");
  std::size_t wanted = eval.positive_count;
  std::size_t attempts = 0;
  const std::size_t max_attempts = wanted * 1000 + 1000;
  while (wanted > 0) {
    if (++attempts > max_attempts)
      throw DataError("could not sample enough negative pairs; graph too dense");
    std::uint32_t a = static_cast<std::uint32_t>(rng.below(n));
    std::uint32_t b = static_cast<std::uint32_t>(rng.below(n));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (eval.train.has_edge(a, b)) continue;
    if (!used.insert({a, b}).second) continue;
    eval.pairs.push_back({a, b, false});
    --wanted;
  }
  return eval;
}

double precision_at_k(const std::vector<TestPair>& pairs,
                      const std::vector<double>& scores, std::size_t k) {
  if (pairs.size() != scores.size())
    throw DataError("pair and score lists differ in length");
  if (pairs.empty()) throw DataError("no pairs to rank");
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    if (pairs[a].u != pairs[b].u) return pairs[a].u < pairs[b].u;
    return pairs[a].v < pairs[b].v;
  });
  const std::size_t top = std::min(k, order.size());
  if (top == 0) throw DataError("precision@0 is undefined");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < top; ++i)
    if (pairs[order[i]].positive) ++hits;
  return static_cast<double>(hits) / static_cast<double>(top);
}

std::vector<ScorerEval> evaluate(const EvalSet& eval, const std::vector<std::size_t>& ks) {
  struct Scorer {
    const char* name;
    double (*fn)(const Graph&, std::uint32_t, std::uint32_t);
  };
  const Scorer scorers[] = {
      {"common_neighbors", common_neighbors},
      {"jaccard", jaccard},
      {"adamic_adar", adamic_adar},
  };
  std::vector<ScorerEval> out;
  for (const auto& s : scorers) {
    std::vector<evalkit::BinaryScore> scored;
    std::vector<double> raw;
    scored.reserve(eval.pairs.size());
    raw.reserve(eval.pairs.size());
    for (const auto& p : eval.pairs) {
      const double value = s.fn(eval.train, p.u, p.v);
      scored.push_back({value, p.positive});
      raw.push_back(value);
    }
    ScorerEval e;
    e.name = s.name;
    e.roc = evalkit::roc_curve(scored);
    e.auc = evalkit::auc(scored);
    for (std::size_t k : ks) e.precision_at[k] = precision_at_k(eval.pairs, raw, k);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace lbd::linkpred
