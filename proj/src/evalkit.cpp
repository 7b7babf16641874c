#include "lbd/evalkit.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_map>

#include "lbd/errors.hpp"
#include "lbd/gzio.hpp"

namespace lbd::evalkit {

namespace {

// Items grouped by distinct score, highest score first.
struct ScoreGroup {
  double score;
  std::uint64_t pos;
  std::uint64_t neg;
};

std::vector<ScoreGroup> group_by_score(const std::vector<BinaryScore>& scored,
                                       std::uint64_t& total_pos, std::uint64_t& total_neg) {
  std::vector<BinaryScore> sorted = scored;
  std::sort(sorted.begin(), sorted.end(), [](const BinaryScore& a, const BinaryScore& b) {
    return a.score > b.score;
  });
  std::vector<ScoreGroup> groups;
  total_pos = total_neg = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    ScoreGroup g{sorted[i].score, 0, 0};
    while (j < sorted.size() && sorted[j].score == g.score) {
      if (sorted[j].positive)
        ++g.pos;
      else
        ++g.neg;
      ++j;
    }
    total_pos += g.pos;
    total_neg += g.neg;
    groups.push_back(g);
    i = j;
  }
  return groups;
}

}  // namespace

double auc(const std::vector<BinaryScore>& scored) {
  std::uint64_t total_pos = 0, total_neg = 0;
  auto groups = group_by_score(scored, total_pos, total_neg);
  if (total_pos == 0 || total_neg == 0)
    throw DataError("AUC needs at least one positive and one negative example");
  // u2 = 2*(pos beats neg) + 1*(pos ties neg), accumulated exactly.
  std::uint64_t u2 = 0;
  std::uint64_t neg_below = total_neg;  // negatives scored strictly lower than the group
  for (const auto& g : groups) {
    neg_below -= g.neg;
    u2 += g.pos * (2 * neg_below + g.neg);
  }
  return static_cast<double>(u2) / (2.0 * static_cast<double>(total_pos) *
                                    static_cast<double>(total_neg));
}

RocCurve roc_curve(const std::vector<BinaryScore>& scored) {
  std::uint64_t total_pos = 0, total_neg = 0;
  auto groups = group_by_score(scored, total_pos, total_neg);
  if (total_pos == 0 || total_neg == 0)
    throw DataError("ROC needs at least one positive and one negative example");
  RocCurve curve;
  curve.points.push_back({0.0, 0.0});
  std::uint64_t tp = 0, fp = 0;
  double area = 0.0;
  for (const auto& g : groups) {
    const double fpr0 = static_cast<double>(fp) / static_cast<double>(total_neg);
    const double tpr0 = static_cast<double>(tp) / static_cast<double>(total_pos);
    tp += g.pos;
    fp += g.neg;
    const double fpr1 = static_cast<double>(fp) / static_cast<double>(total_neg);
    const double tpr1 = static_cast<double>(tp) / static_cast<double>(total_pos);
    area += (fpr1 - fpr0) * (tpr0 + tpr1) / 2.0;
    curve.points.push_back({fpr1, tpr1});
  }
  curve.auc = area;
  return curve;
}

ranking::RankedList borda_fuse(const std::vector<ranking::RankedList>& lists,
                               const std::string& name) {
  if (lists.empty()) throw LookupError("Borda fusion needs at least one ranking");
  const std::size_t n = lists.front().items.size();
  if (n == 0) throw LookupError("Borda fusion over an empty key set");
  std::map<std::string, double> totals;
  for (const auto& item : lists.front().items) totals[item.key] = 0.0;
  if (totals.size() != n)
    throw LookupError("ranking '" + lists.front().name + "' repeats a key");
  for (const auto& list : lists) {
    if (list.items.size() != n)
      throw LookupError("ranking '" + list.name + "' has a different key set");
    auto ranks = ranking::average_ranks(list.items);
    std::size_t seen = 0;
    for (std::size_t i = 0; i < list.items.size(); ++i) {
      auto it = totals.find(list.items[i].key);
      if (it == totals.end())
        throw LookupError("ranking '" + list.name + "' has a different key set");
      it->second += static_cast<double>(n) - ranks[i];
      ++seen;
    }
    if (seen != n) throw LookupError("ranking '" + list.name + "' has a different key set");
  }
  ranking::RankedList fused;
  fused.name = name;
  for (const auto& [key, score] : totals) fused.items.push_back({key, score});
  ranking::sort_descending(fused.items);
  return fused;
}

std::size_t position_of(const ranking::RankedList& list, const std::string& key) {
  auto pos = list.position_of(key);
  if (!pos) throw LookupError("'" + key + "' is not in ranking '" + list.name + "'");
  return *pos;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_ranking_csv(const ranking::RankedList& list, const std::string& path) {
  std::ostringstream out;
  out << "rank,key,score\n";
  for (std::size_t i = 0; i < list.items.size(); ++i) {
    const auto& item = list.items[i];
    std::string key = item.key;
    bool quote = key.find_first_of(",\"") != std::string::npos;
    if (quote) {
      std::string escaped = "\"";
      for (char c : key) {
        if (c == '"') escaped += '"';
        escaped += c;
      }
      escaped += '"';
      key = escaped;
    }
    out << (i + 1) << ',' << key << ',' << format_double(item.score) << '\n';
  }
  write_file(path, out.str());
}

void write_roc_csv(const RocCurve& curve, const std::string& path) {
  std::ostringstream out;
  out << "fpr,tpr\n";
  for (const auto& p : curve.points)
    out << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
  write_file(path, out.str());
}

void write_roc_svg(const RocCurve& curve, const std::string& title,
                   const std::string& path) {
  const int size = 480, margin = 40;
  const double span = size - 2.0 * margin;
  auto px = [&](double fpr) { return margin + fpr * span; };
  auto py = [&](double tpr) { return size - margin - tpr * span; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
      << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  out << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\""
      << py(1) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << span
      << "\" height=\"" << span << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    if (i) out << ' ';
    out << format_double(px(curve.points[i].fpr)) << ','
        << format_double(py(curve.points[i].tpr));
  }
  out << "\"/>\n";
  out << "<text x=\"" << size / 2 << "\" y=\"" << margin / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << title
      << " (AUC " << format_double(curve.auc) << ")</text>\n";
  out << "<text x=\"" << size / 2 << "\" y=\"" << size - margin / 4
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">false positive rate</text>\n";
  out << "<text x=\"" << margin / 3 << "\" y=\"" << size / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 "
      << margin / 3 << " " << size / 2 << ")\">true positive rate</text>\n";
  out << "</svg>\n";
  write_file(path, out.str());
}

}  // namespace lbd::evalkit
