#pragma once

// Shared evaluation utilities: Mann-Whitney AUC computed from integer pair
// counts (so equal inputs give bitwise-equal results), ROC curves whose tied
// scores advance diagonally, Borda rank fusion, and ranked-list writers.

#include <cstdint>
#include <string>
#include <vector>

#include "lbd/ranking.hpp"

namespace lbd::evalkit {

struct BinaryScore {
  double score = 0.0;
  bool positive = false;
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;  // (0,0) .. (1,1), one step per distinct score
  double auc = 0.0;              // trapezoid area under the curve
};

// Area under the ROC curve via the Mann-Whitney statistic. Internally counts
// 2*wins + ties over positive/negative pairs as an exact integer before the
// single final division. Throws DataError unless both classes are present.
double auc(const std::vector<BinaryScore>& scored);

// ROC sweep from the highest score down; all items sharing a score move in
// one combined step. The trapezoid area equals auc() up to rounding.
RocCurve roc_curve(const std::vector<BinaryScore>& scored);

// Borda fusion: every list must rank exactly the same key set; a key earns
// (#keys - average_rank) from each list and the totals are sorted descending
// with ties broken by key. Throws LookupError on mismatched key sets.
// 1-based rank of `key`; throws LookupError when absent.
std::size_t position_of(const ranking::RankedList& list, const std::string& key);

ranking::RankedList borda_fuse(const std::vector<ranking::RankedList>& lists,
                               const std::string& name = "borda");

// Deterministic text renderings (fixed float formatting, '\n' endings).
std::string format_double(double v);
void write_ranking_csv(const ranking::RankedList& list, const std::string& path);
void write_roc_csv(const RocCurve& curve, const std::string& path);
void write_roc_svg(const RocCurve& curve, const std::string& title,
                   const std::string& path);

}  // namespace lbd::evalkit
