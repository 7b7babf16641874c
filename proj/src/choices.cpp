#include "lbd/choices.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lbd/errors.hpp"
#include "lbd/gzio.hpp"

namespace lbd::choices {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<ChoiceRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("choice file not found: " + path, path);
  std::vector<ChoiceRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected 'step: value', got '" + line + "'");
    ChoiceRecord rec{trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
    if (rec.step.empty() || rec.value.empty())
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected 'step: value', got '" + line + "'");
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ChoiceRecord> load_plain(const std::string& path, const std::string& step) {
  std::ifstream in(path);
  if (!in) throw FixtureError("choice file not found: " + path, path);
  std::vector<ChoiceRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    records.push_back({step, line});
  }
  return records;
}

void save_records(const std::vector<ChoiceRecord>& records, const std::string& path) {
  std::ostringstream out;
  for (const auto& r : records) out << r.step << ": " << r.value << '\n';
  write_file(path, out.str());
}

void save_plain(const std::vector<ChoiceRecord>& records, const std::string& path) {
  std::ostringstream out;
  for (const auto& r : records) out << r.value << '\n';
  write_file(path, out.str());
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t next = std::min({row[j] + 1, row[j - 1] + 1,
                                   diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = row[j];
      row[j] = next;
    }
  }
  return row[b.size()];
}

std::vector<std::string> nearest(const std::string& value,
                                 const std::vector<std::string>& keys, std::size_t k) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  scored.reserve(keys.size());
  for (const auto& key : keys) scored.emplace_back(levenshtein(value, key), key);
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && i < k; ++i) out.push_back(scored[i].second);
  return out;
}

ChoiceSession::ChoiceSession(std::vector<ChoiceRecord> replay)
    : replay_(std::move(replay)) {}

ChoiceSession::ChoiceSession(std::istream& in, std::ostream& out)
    : interactive_(true), in_(&in), out_(&out) {}

std::vector<std::string> ChoiceSession::pick(
    const std::string& step, const ranking::RankedList& candidates, std::size_t count,
    const std::function<std::string(const std::string&)>& canon,
    const std::string& prompt) {
  // Canonical form -> original key; first occurrence wins on collisions.
  std::unordered_map<std::string, std::string> lookup;
  std::vector<std::string> keys;
  keys.reserve(candidates.items.size());
  for (const auto& item : candidates.items) {
    keys.push_back(item.key);
    lookup.emplace(canon(item.key), item.key);
  }

  std::vector<std::string> picked;
  std::unordered_set<std::string> taken;
  auto resolve = [&](const std::string& value) -> const std::string* {
    auto it = lookup.find(canon(value));
    return it == lookup.end() ? nullptr : &it->second;
  };
  std::size_t page = 0;
  auto show_page = [&]() {
    constexpr std::size_t kPage = 50;
    const std::size_t begin = page * kPage;
    if (begin >= candidates.items.size()) {
      *out_ << "(no further candidates)\n";
      page = 0;
      return;
    }
    const std::size_t end = std::min(begin + kPage, candidates.items.size());
    for (std::size_t i = begin; i < end; ++i)
      *out_ << "  " << (i + 1) << ". " << candidates.items[i].key << "\n";
    *out_ << "  [" << (begin + 1) << "-" << end << " of " << candidates.items.size()
          << "; 'more' pages]\n";
    ++page;
  };

  while (picked.size() < count) {
    if (interactive_) {
      *out_ << prompt << " [" << (picked.size() + 1) << "/" << count << "] > "
            << std::flush;
      std::string line;
      if (!std::getline(*in_, line))
        throw DataError("input ended before every '" + step + "' choice was made");
      line = trim(line);
      if (line.empty()) continue;
      if (line == "?" || line == "more") {
        show_page();
        continue;
      }
      const std::string* key = resolve(line);
      if (!key) {
        *out_ << "'" << line << "' is not one of the candidates; closest:";
        for (const auto& s : nearest(line, keys)) *out_ << " '" << s << "'";
        *out_ << "\n";
        continue;
      }
      if (!taken.insert(*key).second) {
        *out_ << "'" << *key << "' was already picked\n";
        continue;
      }
      picked.push_back(*key);
      transcript_.push_back({step, *key});
    } else {
      while (replay_pos_ < replay_.size() && replay_[replay_pos_].step != step)
        ++replay_pos_;
      if (replay_pos_ >= replay_.size())
        throw DataError("choice file has no (further) '" + step + "' entry; " +
                        std::to_string(count) + " needed");
      const std::string value = replay_[replay_pos_++].value;
      const std::string* key = resolve(value);
      if (!key) {
        std::string msg = "recorded '" + step + "' choice '" + value +
                          "' matches no candidate; closest:";
        for (const auto& s : nearest(value, keys)) msg += " '" + s + "'";
        throw DataError(msg);
      }
      if (!taken.insert(*key).second)
        throw DataError("recorded '" + step + "' choice '" + value + "' repeats a pick");
      picked.push_back(*key);
      transcript_.push_back({step, *key});
    }
  }
  return picked;
}

}  // namespace lbd::choices
