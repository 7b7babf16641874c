#pragma once

// Outlier-based discovery: project the document-term matrix onto its two
// leading principal directions (power iteration over the implicitly centered
// covariance), cluster the projections with k-means, and flag the documents
// that land in a cluster dominated by the other domain.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lbd/corpus.hpp"
#include "lbd/rng.hpp"
#include "lbd/vectorspace.hpp"

namespace lbd::outlier {

struct Pca2 {
  std::array<std::vector<double>, 2> components;  // unit length, deterministic sign
  std::array<double, 2> eigenvalues{};            // of the 1/n covariance
  std::vector<std::array<double, 2>> projected;   // one point per matrix row
};

// Power iteration with projection deflation for the second component. The
// start vector is fixed internally, so results do not depend on the run seed.
// Sign convention: the largest-magnitude loading of each component is
// positive. `tolerance` bounds the squared change of the iterate between
// sweeps. Throws DataError on matrices with < 2 rows or < 2 columns.
Pca2 pca2(const vectorspace::WeightedMatrix& m, int max_iterations = 1000,
          double tolerance = 1e-18);

struct KmeansResult {
  std::vector<std::uint32_t> assignment;          // cluster id per point
  std::vector<std::array<double, 2>> centers;
  std::vector<double> objective;                  // sum of squared distances per sweep
  std::uint32_t iterations = 0;
};

// k-means++ seeding from `rng`, then Lloyd sweeps until assignments stop
// changing (or max_iterations). An emptied cluster is reseeded with the point
// farthest from its center.
KmeansResult kmeans(const std::vector<std::array<double, 2>>& points, std::uint32_t k,
                    Rng& rng, std::uint32_t max_iterations = 300);

struct ClusterSummary {
  std::uint32_t cluster = 0;
  corpus::Domain majority;               // tied counts resolve to domain A
  std::uint32_t size = 0;
  std::uint32_t minority_count = 0;
};

struct DomainOutliers {
  corpus::Domain domain;
  std::vector<std::string> outlier_ids;  // docs sitting in other-majority clusters
};

struct OutlierResult {
  Pca2 pca;
  KmeansResult clusters;
  std::vector<ClusterSummary> cluster_summaries;  // by cluster index
  std::vector<DomainOutliers> by_domain;          // C first, then A
};

// Full pipeline over a prepared (weighted, pruned) matrix.
OutlierResult detect(const vectorspace::WeightedMatrix& m, std::uint32_t k, Rng& rng);

// "doc_id,domain,x,y,cluster,outlier" rows, matrix row order.
void write_report(const vectorspace::WeightedMatrix& m, const OutlierResult& result,
                  const std::string& path);

}  // namespace lbd::outlier
