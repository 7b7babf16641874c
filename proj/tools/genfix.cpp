// Fixture generator and calibration report. `genfix` materializes the
// synthetic corpora the toolkit's datasets point at; `genfix --stats` reloads
// them through the regular analysis stack and prints the numbers the
// acceptance checks care about, so fixture changes can be sanity-checked
// without running the full pipeline.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lbd/closed_abc.hpp"
#include "lbd/config.hpp"
#include "lbd/corpus.hpp"
#include "lbd/crossbee.hpp"
#include "lbd/errors.hpp"
#include "lbd/evalkit.hpp"
#include "lbd/fixtures.hpp"
#include "lbd/linkpred.hpp"
#include "lbd/open_concept.hpp"
#include "lbd/outlier.hpp"
#include "lbd/rajolink.hpp"
#include "lbd/rng.hpp"
#include "lbd/textprep.hpp"
#include "lbd/vectorspace.hpp"

namespace {

using namespace lbd;

textprep::PreprocessConfig make_prep(const config::RunConfig& cfg,
                                     const config::DatasetSpec& ds) {
  textprep::PreprocessConfig prep;
  prep.fields_used = ds.fields;
  prep.ngram_max = cfg.ngram_max;
  prep.min_support = cfg.min_support;
  prep.stemming_enabled = cfg.stemming;
  prep.stopwords = textprep::load_stopwords(cfg.stopwords_path());
  prep.stem_exceptions = textprep::load_stem_exceptions(cfg.stem_exceptions_path());
  return prep;
}

corpus::DomainPairCorpus load_dataset(const config::RunConfig& cfg,
                                      const config::DatasetSpec& ds) {
  auto loaded = corpus::load_psv(cfg.corpus_path(ds), {}, ds.cutoff);
  auto& c = loaded.corpus;
  c.name = ds.key;
  c.label_c = ds.label_c;
  c.label_a = ds.label_a;
  c.query_terms_c = ds.query_terms_c;
  c.query_terms_a = ds.query_terms_a;
  c.cutoff = ds.cutoff;
  std::cout << "  rejected rows: " << loaded.report.rejected.size() << "\n";
  return corpus::exclude_shared_records(c);
}

std::vector<corpus::Document> load_snapshot_docs(const config::RunConfig& cfg,
                                                 const config::DatasetSpec& ds,
                                                 const std::string& term) {
  auto loaded = corpus::load_psv(cfg.snapshot_path(term), {}, ds.cutoff);
  return std::move(loaded.corpus.docs);
}

double ranked_auc(const ranking::RankedList& list, const corpus::GoldStandard& gold) {
  std::vector<evalkit::BinaryScore> scored;
  scored.reserve(list.items.size());
  for (const auto& item : list.items)
    scored.push_back({item.score, gold.contains(item.key)});
  return evalkit::auc(scored);
}

void print_position(const ranking::RankedList& list, const std::string& key) {
  auto pos = list.position_of(key);
  if (pos)
    std::cout << "    " << key << ": position " << *pos << "\n";
  else
    std::cout << "    " << key << ": ABSENT\n";
}

void stats_rs_dfo(const config::RunConfig& base) {
  const auto* ds = config::find_dataset("rs-dfo");
  config::RunConfig cfg = base;
  cfg.dataset = ds->key;
  std::cout << "== rs-dfo ==\n";
  auto prep = make_prep(cfg, *ds);
  auto c = load_dataset(cfg, *ds);
  std::cout << "  documents: C=" << c.count(corpus::Domain::C)
            << " A=" << c.count(corpus::Domain::A) << "\n";
  auto vocab = textprep::build_vocabulary(c, prep, 4);
  std::size_t common = 0;
  for (const auto& s : vocab.stats)
    if (s.df_a > 0 && s.df_c > 0) ++common;
  std::cout << "  terms: unique_c=" << vocab.unique_count_c()
            << " unique_a=" << vocab.unique_count_a() << " common=" << common
            << "\n";
  auto gold = corpus::load_gold(ds->key, cfg.gold_dir(), prep);
  auto closed = closed_abc::run(vocab, &gold);
  std::cout << "  closed: candidates=" << closed.candidate_count()
            << " gold_found=" << closed.gold_found.size() << "/"
            << gold.b_terms.size() << "\n";
  for (const auto& term : gold.b_terms) print_position(closed.b_terms, term);

  // citation slice: the corpus is reloaded without the cutoff so later
  // publications are known citers
  auto all = corpus::load_psv(cfg.corpus_path(*ds), {}, std::nullopt);
  std::vector<std::string> ids;
  ids.reserve(all.corpus.docs.size());
  for (const auto& d : all.corpus.docs) ids.push_back(d.id);
  std::sort(ids.begin(), ids.end());
  auto rows = linkpred::load_citations(cfg.citations_path(*ds));
  std::vector<linkpred::Citation> kept;
  std::size_t rejected = 0;
  for (auto& r : rows) {
    if (std::binary_search(ids.begin(), ids.end(), r.citing))
      kept.push_back(std::move(r));
    else
      ++rejected;
  }
  auto eval = linkpred::build_eval(kept, ds->cutoff, cfg.test_size, cfg.seed);
  std::cout << "  citations: rows=" << rows.size() << " rejected=" << rejected
            << " train_nodes=" << eval.train.node_count()
            << " train_edges=" << eval.train.edge_count()
            << " positives=" << eval.positive_count << "\n";
  for (const auto& m : linkpred::evaluate(eval))
    std::cout << "    " << m.name << ": auc=" << m.auc << "\n";
}

void stats_mig_mg(const config::RunConfig& base) {
  const auto* ds = config::find_dataset("mig-mg");
  config::RunConfig cfg = base;
  cfg.dataset = ds->key;
  std::cout << "== mig-mg ==\n";
  auto c = load_dataset(cfg, *ds);
  std::cout << "  documents: C=" << c.count(corpus::Domain::C)
            << " A=" << c.count(corpus::Domain::A) << "\n";
  auto stats = open_concept::heading_stats(c);
  std::cout << "  headings: unique_c=" << stats.unique_count(corpus::Domain::C)
            << " unique_a=" << stats.unique_count(corpus::Domain::A)
            << " common=" << stats.common_count() << "\n";
  auto map = open_concept::SemanticMap::load(cfg.mesh_map_path(*ds));
  auto b = open_concept::rank_b_concepts(c, corpus::Domain::C);
  auto filtered = open_concept::filter_by_type(b, map, ds->open_filter_types);
  filtered = open_concept::exclude_keys(filtered, ds->excluded_headings);
  std::cout << "  b candidates: " << filtered.items.size() << ", top:";
  for (std::size_t i = 0; i < filtered.items.size() && i < 4; ++i)
    std::cout << " [" << filtered.items[i].key << "]";
  std::cout << "\n";

  const char* picks[] = {"Vasoconstriction", "Platelet Aggregation",
                         "Spreading Cortical Depression"};
  std::vector<ranking::RankedList> drilldowns;
  for (const char* pick : picks) {
    auto docs = load_snapshot_docs(cfg, *ds, pick);
    auto snap = open_concept::snapshot_heading_ranking(docs, config::term_slug(pick));
    auto typed = open_concept::filter_by_type(snap, map, ds->open_filter_types);
    auto excluded = ds->excluded_headings;
    excluded.push_back(pick);
    typed = open_concept::exclude_keys(typed, excluded);
    std::cout << "  drill-down '" << pick << "': docs=" << docs.size()
              << " typed=" << typed.items.size();
    auto ca = typed.position_of("Calcium");
    auto mg = typed.position_of("Magnesium");
    std::cout << " Calcium@" << (ca ? std::to_string(*ca) : "-") << " Magnesium@"
              << (mg ? std::to_string(*mg) : "-") << "\n";
    drilldowns.push_back(std::move(typed));
  }
  auto shared = open_concept::intersect_keys(drilldowns);
  auto targets = open_concept::fuse_targets(drilldowns, stats);
  std::cout << "  intersection=" << shared.size() << "\n";
  for (std::size_t i = 0; i < targets.size() && i < 4; ++i)
    std::cout << "    target " << i + 1 << ": " << targets[i].heading
              << " score=" << targets[i].fused_score
              << " source_df=" << targets[i].source_df << "\n";
}

void stats_aut_can(const config::RunConfig& base) {
  const auto* ds = config::find_dataset("aut-can");
  config::RunConfig cfg = base;
  cfg.dataset = ds->key;
  std::cout << "== aut-can ==\n";
  auto prep = make_prep(cfg, *ds);
  auto c = load_dataset(cfg, *ds);
  std::cout << "  documents: C=" << c.count(corpus::Domain::C)
            << " A=" << c.count(corpus::Domain::A) << "\n";
  auto vocab = textprep::build_vocabulary(c, prep, 4);
  std::size_t common = 0;
  for (const auto& s : vocab.stats)
    if (s.df_a > 0 && s.df_c > 0) ++common;
  std::cout << "  terms: unique_c=" << vocab.unique_count_c()
            << " unique_a=" << vocab.unique_count_a() << " common=" << common
            << "\n";

  auto gold = corpus::load_gold(ds->key, cfg.gold_dir(), prep);
  auto cb = crossbee::run(vocab);
  std::size_t gold_present = 0;
  for (const auto& item : cb.ensemble.items)
    if (gold.contains(item.key)) ++gold_present;
  std::cout << "  crossbee: candidates=" << cb.ensemble.items.size()
            << " gold_present=" << gold_present << "/" << gold.b_terms.size()
            << " ensemble_auc=" << ranked_auc(cb.ensemble, gold) << "\n";
  for (const auto& baseList : cb.base)
    std::cout << "    " << baseList.name << ": auc=" << ranked_auc(baseList, gold)
              << "\n";

  auto map = open_concept::SemanticMap::load(cfg.mesh_map_path(*ds));
  auto ra = rajolink::ra_ranking(c, map, ds->rajolink_filter_types);
  std::cout << "  ra: " << ra.items.size() << " typed headings\n";
  print_position(ra, "Calcium Channels");
  print_position(ra, "Synaptophysin");
  print_position(ra, "Lactoylglutathione Lyase");

  std::vector<std::vector<corpus::Document>> snapshots;
  for (const char* pick :
       {"Calcium Channels", "Synaptophysin", "Lactoylglutathione Lyase"})
    snapshots.push_back(load_snapshot_docs(cfg, *ds, pick));
  auto jo = rajolink::jo_ranking(snapshots, prep);
  std::cout << "  jo: " << jo.items.size() << " joint terms\n";
  print_position(jo, "calcineurin");

  auto counts = vectorspace::bow_text(c, vocab);
  auto pruned = vectorspace::prune_min_df(counts, cfg.min_term_df);
  auto weighted = vectorspace::tfidf(pruned);
  std::cout << "  outlier matrix: " << weighted.n_rows() << " x "
            << weighted.n_cols() << "\n";
  Rng rng(cfg.seed);
  auto result = outlier::detect(weighted, cfg.clusters, rng);
  for (const auto& s : result.cluster_summaries)
    std::cout << "    cluster " << s.cluster << ": majority="
              << corpus::domain_label(s.majority) << " size=" << s.size
              << " minority=" << s.minority_count << "\n";
  for (const auto& d : result.by_domain)
    std::cout << "    outliers " << corpus::domain_label(d.domain) << ": "
              << d.outlier_ids.size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generate the synthetic fixture corpora"};
  std::string out_dir;
  bool force = false;
  bool stats = false;
  app.add_option("--out", out_dir, "target data directory (default: resource tree)");
  app.add_flag("--force", force, "regenerate even if fixtures look current");
  app.add_flag("--stats", stats, "reload fixtures and print calibration numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    config::RunConfig cfg = config::load_defaults();
    if (!out_dir.empty()) cfg.data_dir = out_dir;
    lbd::fixtures::generate_all(cfg.resolved_data_dir(), force, std::cout);
    if (stats) {
      stats_rs_dfo(cfg);
      stats_mig_mg(cfg);
      stats_aut_can(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "genfix: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
