#include "lbd/vectorspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "lbd/errors.hpp"
#include "lbd/evalkit.hpp"
#include "lbd/gzio.hpp"

namespace lbd::vectorspace {

std::vector<std::uint32_t> WeightedMatrix::column_df() const {
  std::vector<std::uint32_t> df(terms.size(), 0);
  for (const auto& row : rows)
    for (const auto& [col, w] : row) ++df[col];
  return df;
}

WeightedMatrix bow_text(const corpus::DomainPairCorpus& corpus,
                        const textprep::TermVocabulary& vocab) {
  if (textprep::corpus_fingerprint(corpus) != vocab.corpus_fingerprint)
    throw DataError("vocabulary was built from a different corpus than '" + corpus.name +
                    "'");
  WeightedMatrix m;
  m.terms = vocab.terms;
  m.rows.reserve(corpus.docs.size());
  for (const auto& doc : corpus.docs) {
    m.row_ids.push_back(doc.id);
    m.row_domains.push_back(doc.domain);
    auto counts = textprep::extract_document_terms(doc, vocab.config);
    std::vector<std::pair<std::uint32_t, double>> row;
    for (const auto& [term, count] : counts) {
      auto idx = vocab.find(term);
      if (idx) row.emplace_back(static_cast<std::uint32_t>(*idx), static_cast<double>(count));
    }
    std::sort(row.begin(), row.end());
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

WeightedMatrix bow_mesh_impl(const std::vector<const corpus::Document*>& docs) {
  std::map<std::string, std::uint32_t> columns;
  for (const auto* doc : docs)
    for (const auto& h : doc->mesh) columns.emplace(h, 0);
  WeightedMatrix m;
  m.terms.reserve(columns.size());
  for (auto& [heading, idx] : columns) {
    idx = static_cast<std::uint32_t>(m.terms.size());
    m.terms.push_back(heading);
  }
  m.rows.reserve(docs.size());
  for (const auto* doc : docs) {
    m.row_ids.push_back(doc->id);
    m.row_domains.push_back(doc->domain);
    std::map<std::uint32_t, double> counts;
    for (const auto& h : doc->mesh) counts[columns.at(h)] += 1.0;
    m.rows.emplace_back(counts.begin(), counts.end());
  }
  return m;
}

}  // namespace

WeightedMatrix bow_mesh(const corpus::DomainPairCorpus& corpus,
                        std::optional<corpus::Domain> side) {
  std::vector<const corpus::Document*> docs;
  for (const auto& doc : corpus.docs)
    if (!side || doc.domain == *side) docs.push_back(&doc);
  return bow_mesh_impl(docs);
}

WeightedMatrix bow_mesh_docs(const std::vector<corpus::Document>& docs) {
  std::vector<const corpus::Document*> ptrs;
  ptrs.reserve(docs.size());
  for (const auto& doc : docs) ptrs.push_back(&doc);
  return bow_mesh_impl(ptrs);
}

WeightedMatrix tfidf(const WeightedMatrix& counts) {
  if (counts.kind != MatrixKind::counts)
    throw DataError("matrix is already TF-IDF weighted");
  const auto df = counts.column_df();
  const double n = static_cast<double>(counts.n_rows());
  WeightedMatrix m;
  m.kind = MatrixKind::tfidf;
  m.terms = counts.terms;
  m.row_ids = counts.row_ids;
  m.row_domains = counts.row_domains;
  m.rows.reserve(counts.rows.size());
  for (const auto& row : counts.rows) {
    std::vector<std::pair<std::uint32_t, double>> out;
    out.reserve(row.size());
    for (const auto& [col, tf] : row) {
      const double idf = std::log(n / static_cast<double>(df[col]));
      if (idf > 0.0) out.emplace_back(col, tf * idf);
    }
    m.rows.push_back(std::move(out));
  }
  return m;
}

WeightedMatrix prune_min_df(const WeightedMatrix& in, std::uint32_t min_df) {
  const auto df = in.column_df();
  std::vector<std::uint32_t> remap(in.terms.size(), UINT32_MAX);
  WeightedMatrix m;
  m.kind = in.kind;
  for (std::size_t c = 0; c < in.terms.size(); ++c) {
    if (df[c] >= min_df) {
      remap[c] = static_cast<std::uint32_t>(m.terms.size());
      m.terms.push_back(in.terms[c]);
    }
  }
  m.row_ids = in.row_ids;
  m.row_domains = in.row_domains;
  m.rows.reserve(in.rows.size());
  for (const auto& row : in.rows) {
    std::vector<std::pair<std::uint32_t, double>> out;
    for (const auto& [col, w] : row)
      if (remap[col] != UINT32_MAX) out.emplace_back(remap[col], w);
    m.rows.push_back(std::move(out));
  }
  return m;
}

std::vector<double> aggregate_rows(const WeightedMatrix& m,
                                   std::optional<corpus::Domain> side) {
  std::vector<double> sums(m.terms.size(), 0.0);
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    if (side && m.row_domains[r] != *side) continue;
    for (const auto& [col, w] : m.rows[r]) sums[col] += w;
  }
  return sums;
}

void write_triplets(const WeightedMatrix& m, const std::string& path) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (const auto& [col, w] : m.rows[r])
      out << m.row_ids[r] << ' ' << m.terms[col] << ' ' << evalkit::format_double(w)
          << '\n';
  write_file(path, out.str());
}

}  // namespace lbd::vectorspace
