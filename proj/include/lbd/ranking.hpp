#pragma once

// Ranked term/concept lists and the tie conventions used across every ranker:
// descending score, ties broken by ascending key. Ascending variants invert
// the score comparison only; the key tiebreak stays ascending.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lbd::ranking {

struct RankedItem {
  std::string key;
  double score = 0.0;
};

struct RankedList {
  std::string name;  // which ranker produced it
  std::vector<RankedItem> items;

  std::optional<std::size_t> position_of(const std::string& key) const {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].key == key) return i + 1;  // 1-based
    return std::nullopt;
  }
};

inline void sort_descending(std::vector<RankedItem>& items) {
  std::stable_sort(items.begin(), items.end(), [](const RankedItem& a, const RankedItem& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.key < b.key;
  });
}

inline void sort_ascending(std::vector<RankedItem>& items) {
  std::stable_sort(items.begin(), items.end(), [](const RankedItem& a, const RankedItem& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.key < b.key;
  });
}

// Average competition rank per key: items sharing a score share the mean of
// the positions they occupy. Input must already be sorted (either direction).
inline std::vector<double> average_ranks(const std::vector<RankedItem>& sorted) {
  std::vector<double> ranks(sorted.size(), 0.0);
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].score == sorted[i].score) ++j;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[k] = avg;
    i = j;
  }
  return ranks;
}

}  // namespace lbd::ranking
