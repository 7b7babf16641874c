#include "lbd/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lbd/config.hpp"
#include "lbd/date.hpp"
#include "lbd/errors.hpp"
#include "lbd/gzio.hpp"
#include "lbd/hash.hpp"
#include "lbd/rng.hpp"
#include "lbd/textprep.hpp"

namespace lbd::fixtures {
namespace {

// Bump when the generated inventory changes shape; stale caches regenerate.
constexpr const char* kVersion = "synthetic-corpus-v3";

// ---------------------------------------------------------------------------
// word mint
//
// Pronounceable pseudo-words built from consonant-vowel syllables. Every word
// handed out has a Porter stem distinct from every other word's stem (and from
// every reserved real word), so planted term counts survive stemming exactly.

class WordMint {
 public:
  WordMint() {
    reserve("before");  // the only CV-shaped English stopword the encoder can hit
  }

  std::string mint() {
    for (;;) {
      std::string w = encode(next_++);
      if (note(textprep::porter_stem(w))) return w;
    }
  }

  // Registers a real word's stem so no minted word collides with it.
  std::string reserve(const std::string& word) {
    if (!note(textprep::porter_stem(word)))
      throw DataError("fixture word pool stem clash: " + word);
    return word;
  }

 private:
  bool note(const std::string& stem) { return used_.insert(fnv1a64(stem)).second; }

  static std::string encode(std::uint64_t n) {
    static const char kOnset[] = "bcdfghjklmnprstvz";  // 17 onsets x 5 vowels
    static const char kVowel[] = "aeiou";
    std::string w;
    while (n > 0) {
      --n;
      const std::uint64_t d = n % 85;
      n /= 85;
      w += kVowel[d % 5];
      w += kOnset[d / 5];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  std::uint64_t next_ = 7311;  // first three-syllable word
  std::unordered_set<std::uint64_t> used_;
};

// ---------------------------------------------------------------------------
// planting
//
// A planted item is a short run of words that must stay adjacent. Items are
// dealt to documents round-robin, so an item planted with c copies lands in
// exactly c distinct documents and document loads stay even.

using Item = std::vector<std::string>;

struct TextPlan {
  explicit TextPlan(std::size_t n) : docs(n), loose(n) {}

  void plant(const Item& item, std::size_t copies) {
    for (std::size_t i = 0; i < copies; ++i) {
      docs[ptr % docs.size()].push_back(item);
      ++ptr;
    }
  }

  std::vector<std::vector<Item>> docs;
  std::vector<std::vector<std::string>> loose;  // free word section, no separators
  std::size_t ptr = 0;
};

struct MeshPlan {
  explicit MeshPlan(std::size_t n) : docs(n) {}

  void plant(const std::string& heading, std::size_t copies) {
    for (std::size_t i = 0; i < copies; ++i) {
      docs[ptr % docs.size()].push_back(heading);
      ++ptr;
    }
  }

  // Top up short heading lists from a rotating background pool.
  void pad(const std::vector<std::string>& background, std::size_t min_size) {
    std::size_t next = 0;
    for (auto& mesh : docs) {
      while (mesh.size() < min_size) {
        const std::string& h = background[next++ % background.size()];
        if (std::find(mesh.begin(), mesh.end(), h) == mesh.end()) mesh.push_back(h);
      }
    }
  }

  std::vector<std::vector<std::string>> docs;
  std::size_t ptr = 0;
};

// Renders one document's text: items separated by fresh filler words (cycling
// through three per document) so no unplanned word pair ever repeats across
// documents, then the loose words appended behind one more filler.
std::string render_text(const std::vector<Item>& items,
                        const std::vector<std::string>& loose, WordMint& mint,
                        Rng& rng) {
  static const char* kConn[] = {"in", "of", "and", "with", "on", "for"};
  std::string fillers[3];
  std::size_t sep = 0;
  std::string out;
  auto append = [&out](const std::string& w) {
    if (!out.empty()) out += ' ';
    out += w;
  };
  auto filler = [&]() -> const std::string& {
    std::string& f = fillers[sep++ % 3];
    if (f.empty()) f = mint.mint();
    return f;
  };
  for (const auto& item : items) {
    if (!out.empty()) {
      if (rng.below(4) == 0) append(kConn[rng.index(6)]);
      append(filler());
      if (rng.below(5) == 0) append(kConn[rng.index(6)]);
    }
    for (const auto& w : item) append(w);
  }
  if (!loose.empty()) {
    if (!out.empty()) append(filler());
    for (const auto& w : loose) append(w);
  }
  if (!out.empty())
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

// ---------------------------------------------------------------------------
// rows on disk

struct Doc {
  std::string id;
  char domain = 'C';
  std::string date;
  std::string title;
  std::string abstract;
  std::vector<std::string> mesh;
};

void write_corpus(const std::string& path, const std::vector<Doc>& docs,
                  const std::vector<std::string>& raw_tail = {}) {
  GzWriter w(path);
  w.write("pmid|domain|pub_date|title|abstract|mesh\n");
  std::string line;
  for (const auto& d : docs) {
    line.assign(d.id);
    line += '|';
    line += d.domain;
    line += '|';
    line += d.date;
    line += '|';
    line += d.title;
    line += '|';
    line += d.abstract;
    line += '|';
    for (std::size_t i = 0; i < d.mesh.size(); ++i) {
      if (i) line += ';';
      line += d.mesh[i];
    }
    line += '\n';
    w.write(line);
  }
  for (const auto& r : raw_tail) {
    w.write(r);
    w.write("\n");
  }
  w.close();
}

void write_semantic_map(const std::string& path,
                        const std::map<std::string, std::string>& types) {
  GzWriter w(path);
  w.write("# heading|semantic types (';'-separated)\n");
  for (const auto& [heading, t] : types) w.write(heading + "|" + t + "\n");
  w.close();
}

std::string id_of(const char* prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%06zu", prefix, n);
  return buf;
}

std::string random_date(Rng& rng, int y0, int y1, const Date& max) {
  for (;;) {
    Date d{y0 + static_cast<int>(rng.below(static_cast<std::uint64_t>(y1 - y0 + 1))),
           1 + static_cast<int>(rng.below(12)), 1 + static_cast<int>(rng.below(28))};
    if (!(max < d)) return d.to_string();
  }
}

std::string title_case(std::string w) {
  if (!w.empty())
    w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
  return w;
}

// ---------------------------------------------------------------------------
// problem/candidate corpus no. 1: circulation disorder vs dietary oil
//
// Titles only. Three bridge collocations span both sides; four shared
// collocations and six shared unigrams bring the common-term count to exactly
// 27. Everything else is side-local, so vocabulary totals are exact too.

void gen_rs_dfo(const std::string& dir, std::ostream& log) {
  const auto* ds = config::find_dataset("rs-dfo");
  WordMint mint;
  Rng rng(0x5df01);

  static const char* kGoldWords[] = {"blood", "viscosity",  "platelet",
                                     "aggregation", "vascular", "reactivity"};
  static const char* kSharedWords[] = {"capillary", "perfusion", "membrane",
                                       "fluidity",  "serum",     "cholesterol",
                                       "thermal",   "recovery"};
  static const char* kSharedUni[] = {"erythrocyte",  "microcirculation",
                                     "triglyceride", "thromboxane",
                                     "ischemia",     "vasodilation"};
  static const char* kCReal[] = {"phenomenon", "disease",      "syndrome",
                                 "patients",   "clinical",     "treatment",
                                 "digital",    "ulcers",       "attacks",
                                 "fingers",    "skin",         "temperature",
                                 "severity",   "scleroderma",  "systemic",
                                 "sclerosis",  "vibration",    "occupational",
                                 "therapy",    "management",   "diagnosis",
                                 "assessment", "winter",       "episodic"};
  static const char* kAReal[] = {"dietary",         "supplementation",
                                 "fatty",           "acids",
                                 "marine",          "mackerel",
                                 "eicosapentaenoic", "docosahexaenoic",
                                 "lipoprotein",     "cod",
                                 "liver",           "volunteers"};
  for (const char* w : {"raynaud", "fish", "oil"}) mint.reserve(w);
  for (const char* w : kGoldWords) mint.reserve(w);
  for (const char* w : kSharedWords) mint.reserve(w);
  for (const char* w : kSharedUni) mint.reserve(w);
  for (const char* w : kCReal) mint.reserve(w);
  for (const char* w : kAReal) mint.reserve(w);

  const std::size_t nc = 1273, na = 153;
  TextPlan c(nc), a(na);

  // side-local collocations first so the round-robin pointer spreads them
  for (std::size_t i = 0; i < 1435; ++i) c.plant({mint.mint(), mint.mint()}, 2);
  for (std::size_t i = 0; i < 317; ++i) a.plant({mint.mint(), mint.mint()}, 2);

  // bridge terms, present on both sides
  c.plant({"blood", "viscosity"}, 8);
  a.plant({"blood", "viscosity"}, 4);
  c.plant({"platelet", "aggregation"}, 6);
  a.plant({"platelet", "aggregation"}, 3);
  c.plant({"vascular", "reactivity"}, 5);
  a.plant({"vascular", "reactivity"}, 3);

  // the remaining shared vocabulary: 4 collocations (12 terms), 6 unigrams
  c.plant({"capillary", "perfusion"}, 3);
  a.plant({"capillary", "perfusion"}, 2);
  c.plant({"membrane", "fluidity"}, 2);
  a.plant({"membrane", "fluidity"}, 2);
  c.plant({"serum", "cholesterol"}, 4);
  a.plant({"serum", "cholesterol"}, 2);
  c.plant({"thermal", "recovery"}, 2);
  a.plant({"thermal", "recovery"}, 3);
  for (const char* w : kSharedUni) {
    c.plant({w}, 3 + rng.below(4));
    a.plant({w}, 2 + rng.below(3));
  }

  // side-local unigrams: 24 real + 198 minted on C, 12 real + 69 minted on A
  for (const char* w : kCReal) c.plant({w}, 2 + rng.below(8));
  for (std::size_t i = 0; i < 198; ++i) c.plant({mint.mint()}, 2 + rng.below(8));
  for (const char* w : kAReal) a.plant({w}, 2 + rng.below(4));
  for (std::size_t i = 0; i < 69; ++i) a.plant({mint.mint()}, 2 + rng.below(4));

  std::vector<Doc> docs;
  docs.reserve(nc + na + 930);
  for (std::size_t i = 0; i < nc; ++i) {
    auto items = c.docs[i];
    Item tmpl;
    const std::uint64_t pick = rng.below(100);
    if (pick < 55)
      tmpl = {"raynaud's", "phenomenon"};
    else if (pick < 80)
      tmpl = {"raynaud's", "disease"};
    else
      tmpl = {"raynaud", "syndrome"};
    if (rng.below(10) < 7)
      items.insert(items.begin(), tmpl);
    else
      items.push_back(tmpl);
    Doc d;
    d.id = id_of("10", i + 1);
    d.domain = 'C';
    d.date = random_date(rng, 1955, 1985, *Date::parse("1985-11-30"));
    d.title = render_text(items, {}, mint, rng);
    docs.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < na; ++i) {
    auto items = a.docs[i];
    Item tmpl;
    const std::uint64_t pick = rng.below(100);
    if (pick < 40)
      tmpl = {"dietary", "fish", "oil"};
    else if (pick < 75)
      tmpl = {"fish", "oil", "supplementation"};
    else
      tmpl = {"marine", "fish", "oil"};
    if (rng.below(10) < 7)
      items.insert(items.begin(), tmpl);
    else
      items.push_back(tmpl);
    Doc d;
    d.id = id_of("20", i + 1);
    d.domain = 'A';
    d.date = random_date(rng, 1960, 1985, *Date::parse("1985-11-30"));
    d.title = render_text(items, {}, mint, rng);
    docs.push_back(std::move(d));
  }

  // later publications: rejected by the retrieval cutoff, but they cite and
  // get cited, which is what the link-prediction slice runs on
  const std::size_t n_future = 920;
  std::vector<std::pair<std::string, std::string>> future;  // id, date
  for (std::size_t i = 0; i < n_future; ++i) {
    Doc d;
    d.id = id_of("30", i + 1);
    d.domain = 'C';
    d.date = random_date(rng, 1986, 1989, Date{1989, 12, 28});
    d.title = render_text({{mint.mint()}, {mint.mint()}}, {}, mint, rng);
    future.emplace_back(d.id, d.date);
    docs.push_back(std::move(d));
  }

  // records retrieved by both queries: dropped by the shared-record rule
  for (std::size_t i = 0; i < 3; ++i) {
    for (char side : {'C', 'A'}) {
      Doc d;
      d.id = id_of("40", i + 1);
      d.domain = side;
      d.date = random_date(rng, 1970, 1984, *Date::parse("1985-11-30"));
      d.title = render_text({{mint.mint()}, {mint.mint()}}, {}, mint, rng);
      docs.push_back(std::move(d));
    }
  }

  write_corpus(dir + "/" + ds->corpus_file, docs,
               {"999001|C|1985-13-41|Cold response survey||",
                "999002|C|1985-05-05|truncated row|"});
  log << "  rs-dfo: " << nc << " problem + " << na << " candidate records, "
      << n_future << " post-cutoff citers\n";

  // ---- citation fixture -------------------------------------------------
  // Bipartite before the cutoff: papers cite reference works. After the
  // cutoff, each group of later papers shares a reference basket and cites
  // its in-group predecessors, which makes those pairs scorable positives.
  const std::size_t n_rc = 7128, n_ra = 2072;
  std::vector<std::string> rc_date(n_rc), ra_date(n_ra);
  for (auto& s : rc_date) s = random_date(rng, 1955, 1985, *Date::parse("1985-10-31"));
  for (auto& s : ra_date) s = random_date(rng, 1960, 1985, *Date::parse("1985-10-31"));
  auto rc_id = [](std::size_t i) { return id_of("RC", i + 1); };
  auto ra_id = [](std::size_t i) { return id_of("RA", i + 1); };

  GzWriter cw(dir + "/" + ds->citations_file);
  cw.write("citing_id|cited_id|cited_pub_date\n");
  auto row = [&cw](const std::string& citing, const std::string& cited,
                   const std::string& date) {
    cw.write(citing + "|" + cited + "|" + date + "\n");
  };

  std::size_t pc = 0, pa = 0;
  for (std::size_t i = 0; i < nc; ++i) {
    const std::size_t k = 8 + rng.below(7);
    for (std::size_t j = 0; j < k; ++j, ++pc)
      row(id_of("10", i + 1), rc_id(pc % n_rc), rc_date[pc % n_rc]);
  }
  for (std::size_t i = 0; i < na; ++i) {
    const std::size_t k = 13 + rng.below(5);
    for (std::size_t j = 0; j < k; ++j, ++pa)
      row(id_of("20", i + 1), ra_id(pa % n_ra), ra_date[pa % n_ra]);
  }

  const std::size_t group = 8, basket = 18;
  for (std::size_t g = 0; g * group < n_future; ++g) {
    const std::size_t base = (g * 37) % (n_rc - basket);
    for (std::size_t j = 0; j < group && g * group + j < n_future; ++j) {
      const auto& [doc_id, doc_date] = future[g * group + j];
      const std::size_t cites = 9 + rng.below(4);
      for (std::size_t off : rng.sample_distinct(basket, cites))
        row(doc_id, rc_id(base + off), rc_date[base + off]);
      // citations of in-group predecessors: the post-cutoff test pairs
      if (j >= 1) row(doc_id, future[g * group + j - 1].first,
                      future[g * group + j - 1].second);
      if (j >= 2) row(doc_id, future[g * group + j - 2].first,
                      future[g * group + j - 2].second);
    }
  }

  // rows citing from outside the document list: rejected with a report
  for (std::size_t i = 0; i < 40; ++i) {
    const std::size_t ref = rng.below(n_rc);
    row(id_of("U0", i + 1), rc_id(ref), rc_date[ref]);
  }
  // post-cutoff cited works never seen in training: skipped, not scored
  for (std::size_t i = 0; i < 30; ++i) {
    const std::size_t citer = rng.below(n_future);
    row(future[citer].first, id_of("RX", i + 1),
        random_date(rng, 1986, 1989, Date{1989, 12, 28}));
  }
  cw.close();
  log << "  rs-dfo: citation fixture with " << n_rc << "+" << n_ra
      << " reference works\n";
}

// ---------------------------------------------------------------------------
// problem/candidate corpus no. 2: headache disorder vs dietary mineral
//
// Term statistics run over MeSH headings. The problem side carries three
// strong bridge concepts; their drill-down literatures share exactly ten
// typed headings, led by Calcium and Magnesium.

void gen_mig_mg(const std::string& dir, std::ostream& log) {
  const auto* ds = config::find_dataset("mig-mg");
  WordMint mint;
  Rng rng(0x316c2);
  std::map<std::string, std::string> types;

  const std::string kProtein = "Amino Acid, Peptide, or Protein";
  const std::string kPath = "Pathologic Function";
  const std::string kProcess = "Phenomenon or Process";
  const std::string kElement = "Element, Ion, or Isotope";
  const std::string kAllowed[] = {kProtein, kPath, kProcess, kElement};
  const std::string kPlain[] = {"Disease or Syndrome", "Organic Chemical",
                                "Body Part, Organ, or Organ Component",
                                "Mental Process", "Diagnostic Procedure",
                                "Therapeutic or Preventive Procedure"};
  auto mint_heading = [&] { return title_case(mint.mint()); };

  const std::size_t nc = 1156, na = 7320;
  MeshPlan c(nc), a(na);

  // bridge concepts: high document frequency, semantic type on the allowed list
  c.plant("Vasoconstriction", 430);
  types["Vasoconstriction"] = kProcess;
  c.plant("Platelet Aggregation", 380);
  types["Platelet Aggregation"] = kProcess;
  c.plant("Spreading Cortical Depression", 300);
  types["Spreading Cortical Depression"] = kPath;

  // the rare target concept: barely present on the problem side
  c.plant("Calcium", 4);
  types["Calcium"] = kElement;

  // typed headings that stay local to the problem side
  c.plant("Serotonin", 30);
  types["Serotonin"] = kProtein;
  c.plant("Prostaglandins", 25);
  types["Prostaglandins"] = kProtein;
  c.plant("Histamine", 12);
  types["Histamine"] = kProtein;
  for (std::size_t i = 0; i < 109; ++i) {
    const std::string h = mint_heading();
    c.plant(h, 2 + rng.below(39));
    types[h] = kAllowed[i % 4];
  }

  // the query heading itself sits on every record
  c.plant("Migraine", nc);
  types["Migraine"] = "Disease or Syndrome";

  // plainly-typed bulk; the first 227 also occur in the candidate corpus
  std::vector<std::string> commons;
  std::vector<std::string> c_background;
  for (std::size_t i = 0; i < 1690; ++i) {
    const std::string h = mint_heading();
    c.plant(h, 2 + rng.below(2));
    types[h] = kPlain[i % 6];
    if (i < 227) commons.push_back(h);
    if (i >= 227 && c_background.size() < 300) c_background.push_back(h);
  }
  // a few headings the semantic map never heard of
  for (std::size_t i = 0; i < 5; ++i) c.plant(mint_heading(), 2 + rng.below(3));

  a.plant("Magnesium", na);
  types["Magnesium"] = kElement;
  a.plant("Calcium", 150 + rng.below(101));
  for (const auto& h : commons) a.plant(h, 2 + rng.below(9));
  std::vector<std::string> a_background;
  for (std::size_t i = 0; i < 5988; ++i) {
    const std::string h = mint_heading();
    a.plant(h, 2 + rng.below(3));
    if (i % 3 != 2) types[h] = kPlain[i % 6];
    if (a_background.size() < 300) a_background.push_back(h);
  }
  c.pad(c_background, 3);
  a.pad(a_background, 3);

  const Date cutoff = *Date::parse("1987-12-31");
  std::vector<Doc> docs;
  docs.reserve(nc + na + 8);
  for (std::size_t i = 0; i < nc; ++i) {
    Doc d;
    d.id = id_of("50", i + 1);
    d.domain = 'C';
    d.date = random_date(rng, 1950, 1987, cutoff);
    d.title = render_text({{"migraine"}, {mint.mint()}}, {}, mint, rng);
    d.mesh = c.docs[i];
    docs.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < na; ++i) {
    Doc d;
    d.id = id_of("60", i + 1);
    d.domain = 'A';
    d.date = random_date(rng, 1950, 1987, cutoff);
    d.title = render_text({{"magnesium"}, {mint.mint()}}, {}, mint, rng);
    d.mesh = a.docs[i];
    docs.push_back(std::move(d));
  }
  for (char side : {'C', 'A'}) {  // one record listed under both queries
    Doc d;
    d.id = "700001";
    d.domain = side;
    d.date = random_date(rng, 1970, 1986, cutoff);
    d.title = render_text({{mint.mint()}}, {}, mint, rng);
    d.mesh = {c_background[0], c_background[1], c_background[2]};
    docs.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < 2; ++i) {  // past the cutoff: rejected on load
    Doc d;
    d.id = id_of("71", i + 1);
    d.domain = 'C';
    d.date = random_date(rng, 1988, 1990, Date{1990, 12, 28});
    d.title = render_text({{mint.mint()}}, {}, mint, rng);
    d.mesh = {c_background[3]};
    docs.push_back(std::move(d));
  }
  write_corpus(dir + "/" + ds->corpus_file, docs,
               {"799001|C|1987-00-10|Malformed month||"});
  log << "  mig-mg: " << nc << " problem + " << na << " candidate records\n";

  // ---- drill-down literatures -------------------------------------------
  // Ten typed headings recur in all three snapshots: Calcium (strong,
  // slightly known on the problem side), Magnesium (strong, unseen there),
  // three problem-side regulars and five unseen ones. Snapshot-local typed
  // headings keep each filtered list a little wider than the intersection.
  struct Shared {
    const char* heading;
    const std::string& type;
  };
  const Shared kShared[] = {{"Serotonin", kProtein},
                            {"Prostaglandins", kProtein},
                            {"Histamine", kProtein},
                            {"Endorphins", kProtein},
                            {"Vasospasm", kPath},
                            {"Neurogenic Inflammation", kPath},
                            {"Vascular Tone", kProcess},
                            {"Platelet Activation", kProcess}};
  for (const auto& s : kShared) types[s.heading] = s.type;

  struct SnapSpec {
    const char* term;
    std::size_t n;
    std::size_t uniq;
    std::size_t bulk;
    const char* id_prefix;
  };
  const SnapSpec kSnaps[] = {{"Vasoconstriction", 2898, 1, 2000, "81"},
                             {"Platelet Aggregation", 6273, 63, 4000, "82"},
                             {"Spreading Cortical Depression", 180, 3, 120, "83"}};
  for (const auto& spec : kSnaps) {
    MeshPlan s(spec.n);
    s.plant(spec.term, (spec.n * 9) / 10);
    s.plant("Migraine", spec.n / 4);
    const auto frac = [&](double f) {
      return static_cast<std::size_t>(static_cast<double>(spec.n) * f + 0.5);
    };
    s.plant("Calcium", frac(0.20));
    s.plant("Magnesium", frac(0.15));
    for (const auto& sh : kShared)
      s.plant(sh.heading, std::max<std::size_t>(2, frac(0.01 + 0.005 * rng.below(6))));
    for (std::size_t u = 0; u < spec.uniq; ++u) {
      const std::string h = mint_heading();
      s.plant(h, 2 + rng.below(2));
      types[h] = kAllowed[u % 4];
    }
    std::vector<std::string> background;
    for (std::size_t b = 0; b < spec.bulk; ++b) {
      const std::string h = mint_heading();
      s.plant(h, 1 + rng.below(4));
      if (b % 2 == 0) types[h] = kPlain[b % 6];
      if (background.size() < 100) background.push_back(h);
    }
    s.pad(background, 3);

    std::vector<Doc> snap;
    snap.reserve(spec.n);
    std::string title_term = spec.term;
    for (auto& ch : title_term)
      ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (std::size_t i = 0; i < spec.n; ++i) {
      Doc d;
      d.id = id_of(spec.id_prefix, i + 1);
      d.domain = 'A';
      d.date = random_date(rng, 1950, 1987, cutoff);
      d.title = render_text({{title_term}, {mint.mint()}}, {}, mint, rng);
      d.mesh = s.docs[i];
      snap.push_back(std::move(d));
    }
    write_corpus(dir + "/" + config::term_slug(spec.term) + ".psv.gz", snap);
    log << "  mig-mg: drill-down '" << spec.term << "' with " << spec.n
        << " records\n";
  }

  write_semantic_map(dir + "/" + ds->mesh_map_file, types);
}

// ---------------------------------------------------------------------------
// problem/candidate corpus no. 3: developmental disorder vs phosphatase
//
// Titles and abstracts. Bridge phrases with equal document frequency on both
// sides feed the ensemble ranker; per-side vocabulary pools separate the two
// document populations for the outlier view, with a sprinkling of documents
// written in the other side's vocabulary. The MeSH side carries a rarity
// ladder with three pinned drill-down picks, whose literatures share exactly
// 428 terms led (after 15 deliberately stronger hubs) by the target.

void gen_aut_can(const std::string& dir, std::ostream& log) {
  const auto* ds = config::find_dataset("aut-can");
  WordMint mint;
  Rng rng(0xac173);

  for (const char* w :
       {"autism", "autistic", "calcineurin", "synaptic", "plasticity",
        "calmodulin", "radiation", "working", "memory", "bcl", "type",
        "diabetes", "ulcerative", "colitis", "asbestos", "deletion", "syndrome",
        "maternal", "hypothyroxinemia", "bombesin", "22q11", "calcium",
        "channels", "synaptophysin", "lactoylglutathione", "lyase"})
    mint.reserve(w);

  const std::size_t nc = 10819, na = 5320;
  TextPlan c(nc), a(na);

  // shared collocations: one document per side each, common after pooling
  for (std::size_t i = 0; i < 15483; ++i) {
    const Item item{mint.mint(), mint.mint()};
    c.plant(item, 1);
    a.plant(item, 1);
  }
  // side-local collocations
  for (std::size_t i = 0; i < 124560; ++i) c.plant({mint.mint(), mint.mint()}, 2);
  for (std::size_t i = 0; i < 89243; ++i) a.plant({mint.mint(), mint.mint()}, 2);

  // bridge phrases, equal document frequency on both sides
  struct GoldPlant {
    Item item;
    std::size_t df;
  };
  const GoldPlant kGold[] = {{{"synaptic", "plasticity"}, 400},
                             {{"calmodulin"}, 360},
                             {{"radiation"}, 330},
                             {{"working", "memory"}, 300},
                             {{"bcl", "2"}, 270},
                             {{"type", "1", "diabetes"}, 240},
                             {{"ulcerative", "colitis"}, 210},
                             {{"asbestos"}, 180},
                             {{"deletion", "syndrome"}, 150},
                             {{"22q11", "2"}, 130},
                             {{"maternal", "hypothyroxinemia"}, 110},
                             {{"bombesin"}, 100}};
  for (const auto& g : kGold) {
    c.plant(g.item, g.df);
    a.plant(g.item, g.df);
  }

  // per-side working vocabulary: each document samples its own side's pool,
  // except the flavored minority written in the other side's words
  std::vector<std::string> pool_c(3000), pool_a(2500);
  for (auto& w : pool_c) w = mint.mint();
  for (auto& w : pool_a) w = mint.mint();
  auto draw = [&rng](const std::vector<std::string>& pool, std::size_t k,
                     std::vector<std::string>& dst) {
    for (std::size_t idx : rng.sample_distinct(pool.size(), k))
      dst.push_back(pool[idx]);
  };
  for (std::size_t i = 0; i < nc; ++i) {
    auto& dst = c.loose[i];
    if (i % 30 == 7) {
      draw(pool_c, 4, dst);
      draw(pool_a, 16, dst);
    } else {
      draw(pool_c, 20, dst);
    }
    rng.shuffle(dst);
  }
  for (std::size_t i = 0; i < na; ++i) {
    auto& dst = a.loose[i];
    if (i % 118 == 11) {
      draw(pool_a, 4, dst);
      draw(pool_c, 16, dst);
    } else {
      draw(pool_a, 20, dst);
    }
    rng.shuffle(dst);
  }

  // ---- MeSH side ---------------------------------------------------------
  std::map<std::string, std::string> types;
  const std::string kEnz = "Enzymes and Coenzymes";
  const std::string kPro = "Amino Acids, Peptides, and Proteins";
  const std::string kPlain[] = {"Disease or Syndrome", "Behavioral Symptoms",
                                "Nervous System", "Cell Components",
                                "Diagnostic Techniques"};
  MeshPlan mc(nc), ma(na);
  mc.plant("Autistic Disorder", nc);
  types["Autistic Disorder"] = "Disease or Syndrome";

  // the rarity ladder: ascending aggregated weight, alphabetic within a tier.
  // Prefix letters pin the three drill-down picks to their ladder positions.
  auto prefixed = [&](const char* letters, std::size_t i) {
    const std::size_t n = std::char_traits<char>::length(letters);
    return std::string(1, letters[i % n]) + mint.mint();
  };
  auto typed = [&](const std::string& h, std::size_t i) {
    types[h] = (i % 2 == 0) ? kPro : kEnz;
  };
  for (std::size_t i = 0; i < 18; ++i) {  // ahead of every pick
    const std::string h = prefixed("BDFGH", i);
    mc.plant(h, 2);
    typed(h, i);
  }
  for (std::size_t i = 0; i < 18; ++i) {  // same tier as the second pick
    const std::string h = prefixed("BDFGHJKM", i);
    mc.plant(h, 3);
    typed(h, i);
  }
  mc.plant("Synaptophysin", 3);
  types["Synaptophysin"] = kPro;
  mc.plant("Calcium Channels", 4);  // leads its tier alphabetically
  types["Calcium Channels"] = kPro;
  for (std::size_t i = 0; i < 120; ++i) {
    const std::string h = prefixed("DFGHJKMNPRTVZ", i);
    mc.plant(h, 4);
    typed(h, i);
  }
  for (std::size_t i = 0; i < 120; ++i) {
    const std::string h = prefixed("BDFGHJKMNPRTVZ", i);
    mc.plant(h, 5);
    typed(h, i);
  }
  for (std::size_t i = 0; i < 98; ++i) {
    const std::string h = prefixed("BDFGHJKMNPRTVZ", i);
    mc.plant(h, 6);
    typed(h, i);
  }
  mc.plant("Lactoylglutathione Lyase", 7);  // leads the df-7 tier
  types["Lactoylglutathione Lyase"] = kEnz;
  for (std::size_t i = 0; i < 40; ++i) {
    const std::string h = prefixed("MNPRSTVZ", i);
    mc.plant(h, 7);
    typed(h, i);
  }
  for (std::size_t i = 0; i < 78; ++i) {
    const std::string h = prefixed("BDFGHJKMNPRTVZ", i);
    mc.plant(h, 8 + rng.below(18));
    typed(h, i);
  }

  std::vector<std::string> c_background;
  for (std::size_t i = 0; i < 1200; ++i) {
    const std::string h = title_case(mint.mint());
    mc.plant(h, 1 + rng.below(6));
    types[h] = kPlain[i % 5];
    if (c_background.size() < 250) c_background.push_back(h);
  }
  for (std::size_t i = 0; i < 10; ++i)  // unmapped stragglers
    mc.plant(title_case(mint.mint()), 1 + rng.below(4));
  mc.pad(c_background, 3);

  ma.plant("Calcineurin", (na * 11) / 20);
  types["Calcineurin"] = kEnz;
  std::vector<std::string> a_background;
  for (std::size_t i = 0; i < 800; ++i) {
    const std::string h = title_case(mint.mint());
    ma.plant(h, 1 + rng.below(8));
    if (i % 2 == 0) types[h] = kPlain[i % 5];
    if (a_background.size() < 200) a_background.push_back(h);
  }
  ma.pad(a_background, 2);
  write_semantic_map(dir + "/" + ds->mesh_map_file, types);

  // ---- documents ----------------------------------------------------------
  const Date cutoff = *Date::parse("2007-12-31");
  {
    std::vector<Doc> docs;
    docs.reserve(nc + na + 6);
    for (std::size_t i = 0; i < nc; ++i) {
      Doc d;
      d.id = id_of("70", i + 1);
      d.domain = 'C';
      d.date = random_date(rng, 1980, 2007, cutoff);
      d.title = render_text({{"autism"}, {mint.mint()}}, {}, mint, rng);
      d.abstract = render_text(c.docs[i], c.loose[i], mint, rng);
      d.mesh = mc.docs[i];
      docs.push_back(std::move(d));
      c.docs[i].clear();
      c.docs[i].shrink_to_fit();
    }
    for (std::size_t i = 0; i < na; ++i) {
      Doc d;
      d.id = id_of("80", i + 1);
      d.domain = 'A';
      d.date = random_date(rng, 1980, 2007, cutoff);
      d.title = render_text({{"calcineurin"}, {mint.mint()}}, {}, mint, rng);
      d.abstract = render_text(a.docs[i], a.loose[i], mint, rng);
      d.mesh = ma.docs[i];
      docs.push_back(std::move(d));
      a.docs[i].clear();
      a.docs[i].shrink_to_fit();
    }
    for (char side : {'C', 'A'}) {  // retrieved by both queries
      Doc d;
      d.id = "890001";
      d.domain = side;
      d.date = random_date(rng, 1990, 2006, cutoff);
      d.title = render_text({{mint.mint()}}, {}, mint, rng);
      d.mesh = {c_background[0]};
      docs.push_back(std::move(d));
    }
    for (std::size_t i = 0; i < 3; ++i) {  // past the cutoff
      Doc d;
      d.id = id_of("89", i + 2);
      d.domain = 'C';
      d.date = random_date(rng, 2008, 2009, Date{2009, 12, 28});
      d.title = render_text({{mint.mint()}}, {}, mint, rng);
      docs.push_back(std::move(d));
    }
    write_corpus(dir + "/" + ds->corpus_file, docs,
                 {"899001|C|2007-02-30|Malformed day||"});
  }
  log << "  aut-can: " << nc << " problem + " << na << " candidate records\n";

  // ---- drill-down literatures for the rare-term workflow ------------------
  // Joint vocabulary: the target term, 15 stronger hubs, and 412 weaker terms
  // occur in all three snapshots; everything else is snapshot-local.
  const std::size_t sn[3] = {5000, 4500, 2166};
  TextPlan snaps[3] = {TextPlan(sn[0]), TextPlan(sn[1]), TextPlan(sn[2])};

  const std::size_t cal_df[3] = {300, 270, 130};
  for (std::size_t k = 0; k < 3; ++k) snaps[k].plant({"calcineurin"}, cal_df[k]);
  for (std::size_t h = 0; h < 15; ++h) {
    const Item hub{mint.mint()};
    const std::size_t total = 1500 + 47 * h;
    const std::size_t d0 = (total * 43) / 100, d1 = (total * 38) / 100;
    snaps[0].plant(hub, d0);
    snaps[1].plant(hub, d1);
    snaps[2].plant(hub, total - d0 - d1);
  }
  for (std::size_t t = 0; t < 412; ++t) {
    const Item term{mint.mint()};
    const std::size_t total = 6 + (t * 84) / 412;
    const std::size_t d0 = std::max<std::size_t>(1, total / 3);
    const std::size_t d1 = std::max<std::size_t>(1, (total - d0) / 2);
    snaps[0].plant(term, d0);
    snaps[1].plant(term, d1);
    snaps[2].plant(term, total - d0 - d1);
  }
  for (std::size_t k = 0; k < 3; ++k)  // snapshot-local color
    for (std::size_t i = 0; i < sn[k] / 2; ++i)
      snaps[k].plant({mint.mint()}, 1 + rng.below(3));

  const Item kSnapTitle[3] = {{"calcium", "channels"},
                              {"synaptophysin"},
                              {"lactoylglutathione", "lyase"}};
  const char* kSnapPrefix[3] = {"91", "92", "93"};
  const char* kSnapTerm[3] = {"Calcium Channels", "Synaptophysin",
                              "Lactoylglutathione Lyase"};
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<Doc> docs;
    docs.reserve(sn[k]);
    for (std::size_t i = 0; i < sn[k]; ++i) {
      Doc d;
      d.id = id_of(kSnapPrefix[k], i + 1);
      d.domain = 'A';
      d.date = random_date(rng, 1980, 2007, cutoff);
      d.title = render_text({kSnapTitle[k], {mint.mint()}}, {}, mint, rng);
      d.abstract = render_text(snaps[k].docs[i], {}, mint, rng);
      docs.push_back(std::move(d));
    }
    write_corpus(dir + "/" + config::term_slug(kSnapTerm[k]) + ".psv.gz", docs);
    log << "  aut-can: drill-down '" << kSnapTerm[k] << "' with " << sn[k]
        << " records\n";
  }
}

}  // namespace

bool generate_all(const std::string& data_dir, bool force, std::ostream& log) {
  namespace fs = std::filesystem;
  fs::create_directories(data_dir);
  const fs::path marker = fs::path(data_dir) / ".fixtures-ok";

  std::vector<std::string> needed;
  for (const auto& key : config::dataset_keys()) {
    const auto* ds = config::find_dataset(key);
    needed.push_back(ds->corpus_file);
    if (!ds->mesh_map_file.empty()) needed.push_back(ds->mesh_map_file);
    if (!ds->citations_file.empty()) needed.push_back(ds->citations_file);
  }
  for (const char* term : {"Vasoconstriction", "Platelet Aggregation",
                           "Spreading Cortical Depression", "Calcium Channels",
                           "Synaptophysin", "Lactoylglutathione Lyase"})
    needed.push_back(config::term_slug(term) + ".psv.gz");

  if (!force && fs::exists(marker)) {
    std::ifstream in(marker);
    std::string version;
    std::getline(in, version);
    const bool complete = std::all_of(needed.begin(), needed.end(), [&](const auto& f) {
      return fs::exists(fs::path(data_dir) / f);
    });
    if (version == kVersion && complete) {
      log << "fixtures up to date in " << data_dir << "\n";
      return false;
    }
  }

  log << "generating fixtures in " << data_dir << "\n";
  fs::remove(marker);
  gen_rs_dfo(data_dir, log);
  gen_mig_mg(data_dir, log);
  gen_aut_can(data_dir, log);
  std::ofstream out(marker);
  out << kVersion << "\n";
  return true;
}

}  // namespace lbd::fixtures
