#pragma once

// Sparse document-term matrices: raw counts from document text or MeSH
// headings, TF-IDF reweighting, per-domain aggregation, and a triplet dump.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lbd/corpus.hpp"
#include "lbd/textprep.hpp"

namespace lbd::vectorspace {

enum class MatrixKind : std::uint8_t { counts, tfidf };

struct WeightedMatrix {
  MatrixKind kind = MatrixKind::counts;
  std::vector<std::string> terms;                // column keys, ascending
  std::vector<std::string> row_ids;              // document ids, corpus order
  std::vector<corpus::Domain> row_domains;       // aligned with row_ids
  // Per row: (column index, weight), column indices ascending.
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_cols() const { return terms.size(); }
  // Rows containing each column (nonzero count), aligned with terms.
  std::vector<std::uint32_t> column_df() const;
};

// Raw term counts per document, restricted to the vocabulary's term set.
// Throws DataError if the vocabulary was built from a different corpus.
WeightedMatrix bow_text(const corpus::DomainPairCorpus& corpus,
                        const textprep::TermVocabulary& vocab);

// Raw counts over MeSH headings kept verbatim; columns are every heading seen
// on the included rows. Pass a domain to restrict the rows to one side.
WeightedMatrix bow_mesh(const corpus::DomainPairCorpus& corpus,
                        std::optional<corpus::Domain> side = std::nullopt);

// Same, over a bare document list (drill-down literature snapshots).
WeightedMatrix bow_mesh_docs(const std::vector<corpus::Document>& docs);

// weight(d,t) = count * ln(n_rows / df(t)); a term present in every row gets
// weight zero and its entries are dropped. Throws DataError when the input is
// already TF-IDF weighted (no double weighting).
WeightedMatrix tfidf(const WeightedMatrix& counts);

// Drop columns with df below min_df, reindexing the survivors.
WeightedMatrix prune_min_df(const WeightedMatrix& m, std::uint32_t min_df);

// Column sums over all rows, or over one domain's rows. Aligned with terms.
std::vector<double> aggregate_rows(const WeightedMatrix& m,
                                   std::optional<corpus::Domain> side = std::nullopt);

// "row_id term weight" lines, row-major, for inspection and diffing (ids and
// weights never contain spaces, so the middle field is recoverable).
void write_triplets(const WeightedMatrix& m, const std::string& path);

}  // namespace lbd::vectorspace
