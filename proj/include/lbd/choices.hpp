#pragma once

// Expert-in-the-loop selections for the drill-down workflows. A run either
// replays a recorded choice file or asks on the terminal; every accepted pick
// lands in a transcript that can be saved and replayed later.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lbd/ranking.hpp"

namespace lbd::choices {

struct ChoiceRecord {
  std::string step;   // e.g. "bconcept", "ra", "jo"
  std::string value;  // what the expert picked, verbatim
};

// Lines of "step: value"; '#' starts a comment. Throws FixtureError if the
// file is missing and DataError on lines that don't parse.
std::vector<ChoiceRecord> load_records(const std::string& path);
void save_records(const std::vector<ChoiceRecord>& records, const std::string& path);

// Bare values, one per line ('#' comments), all assigned to `step` — the
// choice-file shape used when a workflow has a single decision kind.
std::vector<ChoiceRecord> load_plain(const std::string& path, const std::string& step);
void save_plain(const std::vector<ChoiceRecord>& records, const std::string& path);

// Edit distance and nearest-candidate suggestions for typo diagnostics.
std::size_t levenshtein(const std::string& a, const std::string& b);
std::vector<std::string> nearest(const std::string& value,
                                 const std::vector<std::string>& keys, std::size_t k = 3);

class ChoiceSession {
 public:
  // Replay mode: records are consumed in order per step.
  explicit ChoiceSession(std::vector<ChoiceRecord> replay);
  // Interactive mode: prompts go to `out`, answers come from `in`.
  ChoiceSession(std::istream& in, std::ostream& out);

  // Asks for `count` distinct picks at `step` out of `candidates`. Values are
  // compared through `canon` (both sides), and the matching candidate's
  // original key is what gets returned and recorded. A replay value that
  // matches nothing throws DataError naming the nearest candidates; in
  // interactive mode the question is asked again, and the answers "?" /
  // "more" page through the candidate list 50 rows at a time.
  std::vector<std::string> pick(
      const std::string& step, const ranking::RankedList& candidates, std::size_t count,
      const std::function<std::string(const std::string&)>& canon,
      const std::string& prompt);

  const std::vector<ChoiceRecord>& transcript() const { return transcript_; }

 private:
  bool interactive_ = false;
  std::vector<ChoiceRecord> replay_;
  std::size_t replay_pos_ = 0;
  std::istream* in_ = nullptr;
  std::ostream* out_ = nullptr;
  std::vector<ChoiceRecord> transcript_;
};

}  // namespace lbd::choices
