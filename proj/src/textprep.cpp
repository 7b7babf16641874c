#include "lbd/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "lbd/corpus.hpp"
#include "lbd/errors.hpp"
#include "lbd/gzio.hpp"
#include "lbd/hash.hpp"
#include "lbd/parallel.hpp"

namespace lbd::textprep {

// ===== Porter stemmer =====
//
// Direct port of the classic suffix-stripping algorithm. `b` is the working
// buffer, `k` the index of its last letter, `j` a general offset set by
// ends().

namespace {

struct Porter {
  std::string b;
  int k = 0;
  int j = 0;

  bool cons(int i) const {
    switch (b[static_cast<std::size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of consonant-vowel sequences in [0, j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool doublec(int jj) const {
    if (jj < 1) return false;
    if (b[static_cast<std::size_t>(jj)] != b[static_cast<std::size_t>(jj - 1)]) return false;
    return cons(jj);
  }

  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(const char* s) {
    int len = static_cast<int>(std::char_traits<char>::length(s));
    if (len > k + 1) return false;
    if (b.compare(static_cast<std::size_t>(k - len + 1), static_cast<std::size_t>(len), s) != 0)
      return false;
    j = k - len;
    return true;
  }

  void setto(const char* s) {
    int len = static_cast<int>(std::char_traits<char>::length(s));
    b.replace(static_cast<std::size_t>(j + 1), b.size(), s);
    k = j + len;
  }

  void r(const char* s) {
    if (m() > 0) setto(s);
  }

  void step1ab() {
    if (b[static_cast<std::size_t>(k)] == 's') {
      if (ends("sses")) {
        k -= 2;
      } else if (ends("ies")) {
        setto("i");
      } else if (b[static_cast<std::size_t>(k - 1)] != 's') {
        --k;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k = j;
      if (ends("at")) {
        setto("ate");
      } else if (ends("bl")) {
        setto("ble");
      } else if (ends("iz")) {
        setto("ize");
      } else if (doublec(k)) {
        --k;
        char ch = b[static_cast<std::size_t>(k)];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k;
      } else if (m() == 1 && cvc(k)) {
        setto("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b[static_cast<std::size_t>(k)] = 'i';
  }

  void step2() {
    switch (b[static_cast<std::size_t>(k - 1)]) {
      case 'a':
        if (ends("ational")) { r("ate"); break; }
        if (ends("tional")) { r("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { r("ence"); break; }
        if (ends("anci")) { r("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { r("ize"); break; }
        break;
      case 'l':
        if (ends("abli")) { r("able"); break; }
        if (ends("alli")) { r("al"); break; }
        if (ends("entli")) { r("ent"); break; }
        if (ends("eli")) { r("e"); break; }
        if (ends("ousli")) { r("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { r("ize"); break; }
        if (ends("ation")) { r("ate"); break; }
        if (ends("ator")) { r("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { r("al"); break; }
        if (ends("iveness")) { r("ive"); break; }
        if (ends("fulness")) { r("ful"); break; }
        if (ends("ousness")) { r("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { r("al"); break; }
        if (ends("iviti")) { r("ive"); break; }
        if (ends("biliti")) { r("ble"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b[static_cast<std::size_t>(k)]) {
      case 'e':
        if (ends("icate")) { r("ic"); break; }
        if (ends("ative")) { r(""); break; }
        if (ends("alize")) { r("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { r("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { r("ic"); break; }
        if (ends("ful")) { r(""); break; }
        break;
      case 's':
        if (ends("ness")) { r(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    switch (b[static_cast<std::size_t>(k - 1)]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j >= 0 &&
            (b[static_cast<std::size_t>(j)] == 's' || b[static_cast<std::size_t>(j)] == 't'))
          break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) k = j;
  }

  void step5() {
    j = k;
    if (b[static_cast<std::size_t>(k)] == 'e') {
      int a = m();
      if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
    }
    if (b[static_cast<std::size_t>(k)] == 'l' && doublec(k) && m() > 1) --k;
  }

  std::string run(const std::string& word) {
    if (word.size() <= 2) return word;
    b = word;
    k = static_cast<int>(b.size()) - 1;
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    b.resize(static_cast<std::size_t>(k + 1));
    return b;
  }
};

bool is_ascii_alnum(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_token_char(unsigned char c) { return is_ascii_alnum(c) || c >= 0x80; }

}  // namespace

std::string porter_stem(const std::string& word) {
  // The stemmer operates on lowercase ASCII; anything else passes through.
  for (unsigned char c : word)
    if (!(c >= 'a' && c <= 'z')) return word;
  Porter p;
  return p.run(word);
}

// ===== resources =====

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::unordered_set<std::string> out;
  std::ifstream in(path);
  if (!in) throw FixtureError("stopword list not found: " + path, path);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.insert(line);
  }
  return out;
}

std::unordered_map<std::string, std::string> load_stem_exceptions(const std::string& path) {
  std::unordered_map<std::string, std::string> out;
  std::ifstream in(path);
  if (!in) throw FixtureError("stem exception table not found: " + path, path);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string word, stem;
    if (ss >> word >> stem) out[word] = stem;
  }
  return out;
}

// ===== tokenization and normalization =====

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      bool digits_only = std::all_of(cur.begin(), cur.end(),
                                     [](unsigned char c) { return c >= '0' && c <= '9'; });
      if (!digits_only) out.push_back(cur);
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (is_token_char(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (c == '-' && !cur.empty() && i + 1 < text.size() &&
               is_token_char(static_cast<unsigned char>(text[i + 1]))) {
      // A hyphen joins a token only between alphanumerics.
      cur.push_back('-');
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::vector<std::string> normalize(const std::vector<std::string>& tokens,
                                   const PreprocessConfig& config) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (config.stopwords.count(tok)) continue;
    if (!config.stemming_enabled) {
      out.push_back(tok);
      continue;
    }
    auto ex = config.stem_exceptions.find(tok);
    out.push_back(ex != config.stem_exceptions.end() ? ex->second : porter_stem(tok));
  }
  return out;
}

std::string normalize_term(const std::string& raw, const PreprocessConfig& config) {
  auto norm = normalize(tokenize(raw), config);
  std::string out;
  for (std::size_t i = 0; i < norm.size(); ++i) {
    if (i) out.push_back(' ');
    out += norm[i];
  }
  return out;
}

// ===== term extraction =====

namespace {

void add_ngrams(const std::vector<std::string>& tokens, int ngram_max,
                std::unordered_map<std::string, std::uint32_t>& counts) {
  const std::size_t n = tokens.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::string term;
    for (std::size_t len = 1; len <= static_cast<std::size_t>(ngram_max) && start + len <= n;
         ++len) {
      if (len > 1) term.push_back(' ');
      term += tokens[start + len - 1];
      ++counts[term];
    }
  }
}

}  // namespace

std::unordered_map<std::string, std::uint32_t> extract_document_terms(
    const corpus::Document& doc, const PreprocessConfig& config) {
  std::unordered_map<std::string, std::uint32_t> counts;
  add_ngrams(normalize(tokenize(doc.title), config), config.ngram_max, counts);
  if (config.fields_used == Fields::title_and_abstract)
    add_ngrams(normalize(tokenize(doc.abstract), config), config.ngram_max, counts);
  return counts;
}

// ===== vocabulary =====

std::uint64_t corpus_fingerprint(const corpus::DomainPairCorpus& corpus) {
  std::uint64_t h = fnv1a64(corpus.name);
  h = fnv1a64(std::string(1, '\0') + std::to_string(corpus.docs.size()),
              h);
  for (const auto& d : corpus.docs) {
    h = fnv1a64(d.id, h);
    h ^= static_cast<std::uint64_t>(corpus::domain_label(d.domain));
    h *= 0x100000001b3ull;
  }
  return h;
}

std::optional<std::size_t> TermVocabulary::find(const std::string& term) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), term);
  if (it == terms.end() || *it != term) return std::nullopt;
  return static_cast<std::size_t>(it - terms.begin());
}

const TermStats* TermVocabulary::stats_of(const std::string& term) const {
  auto idx = find(term);
  return idx ? &stats[*idx] : nullptr;
}

std::size_t TermVocabulary::unique_count_a() const {
  return static_cast<std::size_t>(
      std::count_if(stats.begin(), stats.end(), [](const TermStats& s) { return s.df_a > 0; }));
}

std::size_t TermVocabulary::unique_count_c() const {
  return static_cast<std::size_t>(
      std::count_if(stats.begin(), stats.end(), [](const TermStats& s) { return s.df_c > 0; }));
}

TermVocabulary build_vocabulary(const corpus::DomainPairCorpus& corpus,
                                const PreprocessConfig& config, unsigned threads) {
  if (config.ngram_max < 1) throw ConfigError("ngram_max must be >= 1");
  if (config.min_support < 1) throw ConfigError("min_support must be >= 1");

  // Words of the retrieval queries, normalized the same way as the text.
  std::unordered_set<std::string> query_words;
  for (const auto* list : {&corpus.query_terms_a, &corpus.query_terms_c})
    for (const auto& q : *list)
      for (const auto& w : normalize(tokenize(q), config))
        if (!w.empty()) query_words.insert(w);

  const unsigned workers = resolve_threads(threads);
  std::vector<std::unordered_map<std::string, TermStats>> shards(
      std::max<std::size_t>(1, std::min<std::size_t>(workers, corpus.docs.size())));

  parallel_chunks(corpus.docs.size(), workers, [&](unsigned shard, std::size_t begin,
                                                   std::size_t end) {
    auto& local = shards[shard];
    for (std::size_t i = begin; i < end; ++i) {
      const auto& doc = corpus.docs[i];
      auto doc_terms = extract_document_terms(doc, config);
      for (const auto& [term, count] : doc_terms) {
        auto& s = local[term];
        if (doc.domain == corpus::Domain::A) {
          s.tf_a += count;
          s.df_a += 1;
        } else {
          s.tf_c += count;
          s.df_c += 1;
        }
      }
    }
  });

  // Integer merges commute, so the result is independent of the shard split.
  std::unordered_map<std::string, TermStats> merged;
  for (auto& shard : shards) {
    if (merged.empty()) {
      merged = std::move(shard);
      continue;
    }
    for (auto& [term, s] : shard) {
      auto& t = merged[term];
      t.tf_a += s.tf_a;
      t.tf_c += s.tf_c;
      t.df_a += s.df_a;
      t.df_c += s.df_c;
    }
    shard.clear();
  }

  auto contains_query_word = [&](const std::string& term) {
    if (query_words.empty()) return false;
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t sp = term.find(' ', start);
      std::size_t end = sp == std::string::npos ? term.size() : sp;
      if (query_words.count(term.substr(start, end - start))) return true;
      if (sp == std::string::npos) break;
      start = sp + 1;
    }
    return false;
  };

  TermVocabulary vocab;
  vocab.config = config;
  vocab.corpus_fingerprint = corpus_fingerprint(corpus);
  vocab.terms.reserve(merged.size());
  for (auto& [term, s] : merged) {
    if (s.df_a + s.df_c < static_cast<std::uint32_t>(config.min_support)) continue;
    if (contains_query_word(term)) continue;
    vocab.terms.push_back(term);
  }
  std::sort(vocab.terms.begin(), vocab.terms.end());
  vocab.stats.reserve(vocab.terms.size());
  for (const auto& term : vocab.terms) vocab.stats.push_back(merged[term]);
  return vocab;
}

void save_vocabulary(const TermVocabulary& vocab, const std::string& path) {
  std::ostringstream out;
  out << "term|tf_a|tf_c|df_a|df_c\n";
  for (std::size_t i = 0; i < vocab.terms.size(); ++i) {
    const auto& s = vocab.stats[i];
    out << vocab.terms[i] << '|' << s.tf_a << '|' << s.tf_c << '|' << s.df_a << '|' << s.df_c
        << '\n';
  }
  write_file(path, out.str());
}

std::unordered_map<std::string, BagStats> count_terms(
    const std::vector<const corpus::Document*>& docs, const PreprocessConfig& config) {
  std::unordered_map<std::string, BagStats> counts;
  for (const auto* doc : docs) {
    auto doc_terms = extract_document_terms(*doc, config);
    for (const auto& [term, count] : doc_terms) {
      auto& s = counts[term];
      s.tf += count;
      s.df += 1;
    }
  }
  return counts;
}

}  // namespace lbd::textprep
