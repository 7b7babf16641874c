#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace lbd::corpus {
struct Document;
struct DomainPairCorpus;
}

namespace lbd::textprep {

enum class Fields : std::uint8_t { title_only, title_and_abstract };

struct PreprocessConfig {
  Fields fields_used = Fields::title_only;
  int ngram_max = 2;       // terms are all contiguous 1..n-grams
  int min_support = 2;     // minimum corpus-wide document frequency
  bool stemming_enabled = true;
  std::unordered_set<std::string> stopwords;
  std::unordered_map<std::string, std::string> stem_exceptions;
};

// Classic suffix-stripping stemmer. Exposed for fixture tests.
std::string porter_stem(const std::string& word);

std::unordered_set<std::string> load_stopwords(const std::string& path);
std::unordered_map<std::string, std::string> load_stem_exceptions(const std::string& path);

// Lowercases and splits into tokens. Hyphens survive between alphanumerics
// ("5-hydroxytryptamine" stays whole), apostrophes split, and tokens that are
// nothing but digits are dropped.
std::vector<std::string> tokenize(const std::string& text);

// Stopword removal plus (optional) stemming, order preserved.
std::vector<std::string> normalize(const std::vector<std::string>& tokens,
                                   const PreprocessConfig& config);

// Tokenize + normalize + space-join: the canonical form used for comparing
// terms, gold entries, headings, and replay choices.
std::string normalize_term(const std::string& raw, const PreprocessConfig& config);

// The multiset of 1..n-gram terms of one document under `config`. N-grams
// never span the title/abstract boundary.
std::unordered_map<std::string, std::uint32_t> extract_document_terms(
    const corpus::Document& doc, const PreprocessConfig& config);

struct TermStats {
  std::uint32_t tf_a = 0;  // total occurrences, candidate domain
  std::uint32_t tf_c = 0;  // total occurrences, problem domain
  std::uint32_t df_a = 0;  // documents containing the term, candidate domain
  std::uint32_t df_c = 0;
};

struct TermVocabulary {
  std::vector<std::string> terms;  // sorted lexicographically
  std::vector<TermStats> stats;    // aligned with `terms`
  PreprocessConfig config;
  std::uint64_t corpus_fingerprint = 0;

  std::optional<std::size_t> find(const std::string& term) const;  // index into terms
  const TermStats* stats_of(const std::string& term) const;
  std::size_t unique_count_a() const;
  std::size_t unique_count_c() const;
};

std::uint64_t corpus_fingerprint(const corpus::DomainPairCorpus& corpus);

// Builds per-domain tf/df statistics over the whole corpus, then drops terms
// below min_support (summed df) and terms containing any query word of either
// domain (after identical normalization).
TermVocabulary build_vocabulary(const corpus::DomainPairCorpus& corpus,
                                const PreprocessConfig& config, unsigned threads = 1);

// Writes `term|tf_a|tf_c|df_a|df_c`, one row per term, sorted.
void save_vocabulary(const TermVocabulary& vocab, const std::string& path);

struct BagStats {
  std::uint64_t tf = 0;
  std::uint32_t df = 0;
};

// Plain tf/df counts over an arbitrary document set (no support floor, no
// query-word exclusion); used for drill-down snapshots.
std::unordered_map<std::string, BagStats> count_terms(
    const std::vector<const corpus::Document*>& docs, const PreprocessConfig& config);

}  // namespace lbd::textprep
