#include "lbd/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "lbd/choices.hpp"
#include "lbd/closed_abc.hpp"
#include "lbd/corpus.hpp"
#include "lbd/crossbee.hpp"
#include "lbd/errors.hpp"
#include "lbd/evalkit.hpp"
#include "lbd/gzio.hpp"
#include "lbd/linkpred.hpp"
#include "lbd/manifest.hpp"
#include "lbd/open_concept.hpp"
#include "lbd/outlier.hpp"
#include "lbd/rajolink.hpp"
#include "lbd/rng.hpp"
#include "lbd/textprep.hpp"
#include "lbd/vectorspace.hpp"

namespace fs = std::filesystem;

namespace lbd::pipeline {

namespace {

// ---------------------------------------------------------------------------
// shared context and staging

struct Context {
  config::RunConfig cfg;
  const config::DatasetSpec* ds = nullptr;
  textprep::PreprocessConfig prep;
};

Context make_context(const config::RunConfig& cfg) {
  Context ctx;
  ctx.cfg = cfg;
  ctx.ds = config::find_dataset(cfg.dataset);
  if (!ctx.ds) {
    std::string msg = "unknown dataset '" + cfg.dataset + "' (known:";
    for (const auto& k : config::dataset_keys()) msg += " " + k;
    throw ConfigError(msg + ")");
  }
  ctx.prep.fields_used = ctx.ds->fields;
  ctx.prep.ngram_max = cfg.ngram_max;
  ctx.prep.min_support = cfg.min_support;
  ctx.prep.stemming_enabled = cfg.stemming;
  ctx.prep.stopwords = textprep::load_stopwords(cfg.stopwords_path());
  ctx.prep.stem_exceptions = textprep::load_stem_exceptions(cfg.stem_exceptions_path());
  return ctx;
}

// Artifacts are written into <out>/.stage and renamed into <out> on commit;
// abandoning (any failure) wipes the staging tree so the output directory
// never holds partial results.
class OutputStage {
 public:
  explicit OutputStage(const std::string& out_dir)
      : out_dir_(out_dir), stage_dir_(out_dir + "/.stage") {
    fs::create_directories(stage_dir_);
    for (const auto& entry : fs::directory_iterator(stage_dir_))
      fs::remove_all(entry.path());  // leftovers of a crashed run
  }

  ~OutputStage() { abandon(); }

  // Declares an artifact and hands back the staging path to write it to.
  std::string file(const std::string& label, const std::string& name) {
    artifacts_.emplace_back(label, name);
    return stage_dir_ + "/" + name;
  }

  void commit(nlohmann::json& doc) {
    for (const auto& [label, name] : artifacts_) {
      const std::string target = out_dir_ + "/" + name;
      fs::rename(stage_dir_ + "/" + name, target);
      manifest::add_output(doc, label, name, target);
    }
    fs::remove_all(stage_dir_);
    done_ = true;
  }

  void abandon() {
    if (done_) return;
    done_ = true;
    std::error_code ec;
    fs::remove_all(stage_dir_, ec);
  }

 private:
  std::string out_dir_, stage_dir_;
  std::vector<std::pair<std::string, std::string>> artifacts_;
  bool done_ = false;
};

int run_command(const std::string& command, const config::RunConfig& cfg,
                const std::function<void(nlohmann::json&, OutputStage&)>& body) {
  if (cfg.out_dir.empty()) throw ConfigError("run.out_dir: must not be empty");
  fs::create_directories(cfg.out_dir);
  nlohmann::json doc = manifest::base(command, cfg);
  const std::string manifest_path = cfg.out_dir + "/manifest.json";
  OutputStage stage(cfg.out_dir);
  try {
    body(doc, stage);
    stage.commit(doc);
    manifest::write(doc, manifest_path);
    return 0;
  } catch (const std::exception& e) {
    stage.abandon();
    manifest::write(doc, manifest_path, e.what());
    throw;
  }
}

// ---------------------------------------------------------------------------
// fixture loading

corpus::LoadResult load_corpus(const Context& ctx, nlohmann::json& doc, std::ostream& out) {
  const std::string path = ctx.cfg.corpus_path(*ctx.ds);
  manifest::add_input(doc, "corpus", path);
  auto loaded = corpus::load_psv(path, {}, ctx.ds->cutoff);
  auto& c = loaded.corpus;
  c.name = ctx.ds->key;
  c.label_c = ctx.ds->label_c;
  c.label_a = ctx.ds->label_a;
  c.query_terms_c = ctx.ds->query_terms_c;
  c.query_terms_a = ctx.ds->query_terms_a;
  c.cutoff = ctx.ds->cutoff;
  c = corpus::exclude_shared_records(c);

  doc["stats"]["documents_c"] = c.count(corpus::Domain::C);
  doc["stats"]["documents_a"] = c.count(corpus::Domain::A);
  doc["stats"]["rejected_rows"] = loaded.report.rejected.size();
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t i = 0; i < loaded.report.rejected.size() && i < 10; ++i)
    samples.push_back({{"line", loaded.report.rejected[i].line},
                       {"reason", loaded.report.rejected[i].reason}});
  if (!samples.empty()) doc["stats"]["rejected_samples"] = samples;

  out << "loaded " << c.docs.size() << " documents (" << c.count(corpus::Domain::C)
      << " " << c.label_c << " / " << c.count(corpus::Domain::A) << " " << c.label_a
      << "), " << loaded.report.rejected.size() << " rows rejected\n";
  return loaded;
}

textprep::TermVocabulary build_vocab(const Context& ctx,
                                     const corpus::DomainPairCorpus& c,
                                     std::ostream& out) {
  auto vocab = textprep::build_vocabulary(c, ctx.prep, ctx.cfg.threads);
  out << "vocabulary: " << vocab.terms.size() << " terms ("
      << vocab.unique_count_c() << " in " << c.label_c << ", "
      << vocab.unique_count_a() << " in " << c.label_a << ")\n";
  return vocab;
}

corpus::GoldStandard load_gold(const Context& ctx, nlohmann::json& doc) {
  const std::string path = ctx.cfg.gold_dir() + "/" + ctx.ds->key + ".gold.txt";
  manifest::add_input(doc, "gold", path);
  return corpus::load_gold(ctx.ds->key, ctx.cfg.gold_dir(), ctx.prep);
}

open_concept::SemanticMap load_semantic_map(const Context& ctx, nlohmann::json& doc) {
  if (ctx.ds->mesh_map_file.empty())
    throw ConfigError("dataset '" + ctx.ds->key + "' has no semantic-type map");
  const std::string path = ctx.cfg.mesh_map_path(*ctx.ds);
  manifest::add_input(doc, "semantic_map", path);
  return open_concept::SemanticMap::load(path);
}

std::vector<corpus::Document> load_snapshot(const Context& ctx, const std::string& term,
                                            nlohmann::json& doc) {
  const std::string path = ctx.cfg.snapshot_path(term);
  if (!file_exists(path))
    throw FixtureError("drill-down snapshot for '" + term + "' not found: " + path, path);
  manifest::add_input(doc, "snapshot:" + config::term_slug(term), path);
  auto loaded = corpus::load_psv(path, {}, ctx.ds->cutoff);
  return std::move(loaded.corpus.docs);
}

// The expert session for a workflow: replay from the configured choice file,
// or prompt interactively. `plain` selects the bare-lines replay format.
choices::ChoiceSession make_session(const Context& ctx, const std::string& step,
                                    bool plain, nlohmann::json& doc, std::istream& in,
                                    std::ostream& out) {
  if (ctx.cfg.interactive) return choices::ChoiceSession(in, out);
  if (ctx.cfg.choices_file.empty())
    throw ConfigError("choices.file: this workflow needs --choices <file> or --interactive");
  manifest::add_input(doc, "choices", ctx.cfg.choices_file);
  auto records = plain ? choices::load_plain(ctx.cfg.choices_file, step)
                       : choices::load_records(ctx.cfg.choices_file);
  return choices::ChoiceSession(std::move(records));
}

void add_common_inputs(const Context& ctx, nlohmann::json& doc) {
  manifest::add_input(doc, "stopwords", ctx.cfg.stopwords_path());
  manifest::add_input(doc, "stem_exceptions", ctx.cfg.stem_exceptions_path());
}

std::function<std::string(const std::string&)> canon_fn(const Context& ctx) {
  const textprep::PreprocessConfig prep = ctx.prep;
  return [prep](const std::string& raw) { return textprep::normalize_term(raw, prep); };
}

// ---------------------------------------------------------------------------
// artifact writers

void write_term_psv(const ranking::RankedList& list, const textprep::TermVocabulary& vocab,
                    const corpus::GoldStandard* gold, const std::string& path) {
  std::ostringstream text;
  text << "term|df_a|df_c|is_gold\n";
  for (const auto& item : list.items) {
    const auto* stats = vocab.stats_of(item.key);
    text << item.key << '|' << (stats ? stats->df_a : 0) << '|' << (stats ? stats->df_c : 0)
         << '|' << (gold && gold->contains(item.key) ? 1 : 0) << '\n';
  }
  write_file(path, text.str());
}

void write_scored_psv(const ranking::RankedList& list, const corpus::GoldStandard* gold,
                      const std::string& path) {
  std::ostringstream text;
  text << "term|score|rank|is_gold\n";
  std::size_t rank = 0;
  for (const auto& item : list.items) {
    ++rank;
    text << item.key << '|' << evalkit::format_double(item.score) << '|' << rank << '|'
         << (gold && gold->contains(item.key) ? 1 : 0) << '\n';
  }
  write_file(path, text.str());
}

std::vector<evalkit::BinaryScore> scores_against_gold(const ranking::RankedList& list,
                                                      const corpus::GoldStandard& gold) {
  std::vector<evalkit::BinaryScore> scored;
  scored.reserve(list.items.size());
  for (const auto& item : list.items)
    scored.push_back({item.score, gold.contains(item.key)});
  return scored;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_ingest(const Context& ctx, std::istream&, std::ostream& out) {
  return run_command("ingest", ctx.cfg, [&](nlohmann::json& doc, OutputStage& stage) {
    add_common_inputs(ctx, doc);
    auto loaded = load_corpus(ctx, doc, out);
    const auto& c = loaded.corpus;

    corpus::save_psv(c.docs, stage.file("corpus", "corpus.psv.gz"));

    std::size_t unique_c = 0, unique_a = 0, common = 0;
    if (ctx.ds->terms_from_headings) {
      auto stats = open_concept::heading_stats(c);
      unique_c = stats.unique_count(corpus::Domain::C);
      unique_a = stats.unique_count(corpus::Domain::A);
      common = stats.common_count();
      std::ostringstream text;
      text << "term|tf_a|tf_c|df_a|df_c\n";
      for (std::size_t i = 0; i < stats.headings.size(); ++i)
        text << stats.headings[i] << '|' << stats.tf_a[i] << '|' << stats.tf_c[i] << '|'
             << stats.df_a[i] << '|' << stats.df_c[i] << '\n';
      write_file(stage.file("vocabulary", "vocabulary.psv.gz"), text.str());
      doc["stats"]["term_source"] = "headings";
    } else {
      auto vocab = build_vocab(ctx, c, out);
      unique_c = vocab.unique_count_c();
      unique_a = vocab.unique_count_a();
      for (const auto& s : vocab.stats)
        if (s.df_a > 0 && s.df_c > 0) ++common;
      textprep::save_vocabulary(vocab, stage.file("vocabulary", "vocabulary.psv.gz"));
      doc["stats"]["term_source"] = "text";
    }
    doc["stats"]["unique_terms_c"] = unique_c;
    doc["stats"]["unique_terms_a"] = unique_a;
    doc["stats"]["common_terms"] = common;
    out << "terms: " << unique_c << " " << c.label_c << " / " << unique_a << " "
        << c.label_a << ", " << common << " common\n";
  });
}

int cmd_closed(const Context& ctx, std::istream&, std::ostream& out) {
  return run_command("closed", ctx.cfg, [&](nlohmann::json& doc, OutputStage& stage) {
    add_common_inputs(ctx, doc);
    auto loaded = load_corpus(ctx, doc, out);
    auto vocab = build_vocab(ctx, loaded.corpus, out);
    auto gold = load_gold(ctx, doc);
    auto result = closed_abc::run(vocab, &gold);

    write_term_psv(result.b_terms, vocab, &gold, stage.file("terms", "closed_terms.psv"));

    doc["stats"]["candidates"] = result.candidate_count();
    doc["stats"]["gold_total"] = gold.b_terms.size();
    doc["stats"]["gold_found"] = result.gold_found;
    doc["stats"]["gold_missed"] = result.gold_missed;
    nlohmann::json positions = nlohmann::json::object();
    for (const auto& term : result.gold_found)
      positions[term] = *result.b_terms.position_of(term);
    doc["stats"]["gold_positions"] = positions;
    out << "bridging candidates: " << result.candidate_count() << "; gold recalled "
        << result.gold_found.size() << "/" << gold.b_terms.size() << "\n";
  });
}

int cmd_crossbee(const Context& ctx, std::istream&, std::ostream& out) {
  return run_command("crossbee", ctx.cfg, [&](nlohmann::json& doc, OutputStage& stage) {
    add_common_inputs(ctx, doc);
    auto loaded = load_corpus(ctx, doc, out);
    auto vocab = build_vocab(ctx, loaded.corpus, out);
    auto gold = load_gold(ctx, doc);

    crossbee::EnsembleConfig ens;
    ens.weights = ctx.cfg.heuristic_weights;
    auto result = crossbee::run(vocab, ens);

    write_scored_psv(result.ensemble, &gold,
                     stage.file("ensemble", "crossbee_ensemble.psv"));

    auto scored = scores_against_gold(result.ensemble, gold);
    auto curve = evalkit::roc_curve(scored);
    const double ensemble_auc = evalkit::auc(scored);
    evalkit::write_roc_csv(curve, stage.file("roc", "crossbee_roc.csv"));
    evalkit::write_roc_svg(curve, "ensemble ROC (" + ctx.ds->key + ")",
                           stage.file("roc_svg", "crossbee_roc.svg"));

    doc["stats"]["candidates"] = result.ensemble.items.size();
    doc["stats"]["auc_ensemble"] = ensemble_auc;
    nlohmann::json base_aucs = nlohmann::json::object();
    for (const auto& list : result.base)
      base_aucs[list.name] = evalkit::auc(scores_against_gold(list, gold));
    doc["stats"]["auc_base"] = base_aucs;
    std::size_t gold_present = 0;
    for (const auto& term : gold.b_terms)
      if (result.ensemble.position_of(term)) ++gold_present;
    doc["stats"]["gold_present"] = gold_present;
    out << "ensemble over " << result.ensemble.items.size() << " candidates; AUC "
        << evalkit::format_double(ensemble_auc) << "\n";
  });
}

int cmd_open(const Context& ctx, std::istream& in, std::ostream& out) {
  return run_command("open", ctx.cfg, [&](nlohmann::json& doc, OutputStage& stage) {
    add_common_inputs(ctx, doc);
    auto loaded = load_corpus(ctx, doc, out);
    const auto& c = loaded.corpus;
    auto map = load_semantic_map(ctx, doc);
    if (ctx.ds->open_filter_types.empty())
      throw ConfigError("dataset '" + ctx.ds->key +
                        "' has no bridge semantic types configured");

    auto stats = open_concept::heading_stats(c);
    auto ranked = open_concept::rank_b_concepts(c, corpus::Domain::C);
    auto candidates =
        open_concept::filter_by_type(ranked, map, ctx.ds->open_filter_types);
    candidates = open_concept::exclude_keys(candidates, ctx.ds->excluded_headings);
    candidates.name = "b_candidates";
    evalkit::write_ranking_csv(candidates,
                               stage.file("b_candidates", "b_candidates.csv"));
    out << "bridge candidates after the semantic filter: " << candidates.items.size()
        << "\n";

    auto session = make_session(ctx, "bconcept", /*plain=*/true, doc, in, out);
    auto picks = session.pick("bconcept", candidates, ctx.ds->open_picks, canon_fn(ctx),
                              "bridge concept");

    std::vector<ranking::RankedList> drilldowns;
    nlohmann::json pick_info = nlohmann::json::array();
    for (const auto& heading : picks) {
      auto docs = load_snapshot(ctx, heading, doc);
      auto snap = open_concept::snapshot_heading_ranking(docs, config::term_slug(heading));
      auto filtered = open_concept::filter_by_type(snap, map, ctx.ds->open_filter_types);
      auto excluded = ctx.ds->excluded_headings;
      excluded.push_back(heading);
      filtered = open_concept::exclude_keys(filtered, excluded);
      out << "  " << heading << ": " << docs.size() << " documents, "
          << filtered.items.size() << " typed headings\n";
      pick_info.push_back({{"heading", heading},
                           {"snapshot_documents", docs.size()},
                           {"filtered_headings", filtered.items.size()}});
      drilldowns.push_back(std::move(filtered));
    }

    auto shared = open_concept::intersect_keys(drilldowns);
    auto targets = open_concept::fuse_targets(drilldowns, stats);

    ranking::RankedList fused;
    fused.name = "targets";
    nlohmann::json target_rows = nlohmann::json::array();
    for (const auto& t : targets) {
      fused.items.push_back({t.heading, t.fused_score});
      target_rows.push_back({{"heading", t.heading},
                             {"fused_score", t.fused_score},
                             {"source_df", t.source_df},
                             {"novel", t.source_df == 0}});
    }
    evalkit::write_ranking_csv(fused, stage.file("targets", "targets.csv"));

    nlohmann::json report;
    report["dataset"] = ctx.ds->key;
    report["b_candidates"] = candidates.items.size();
    report["picks"] = pick_info;
    report["intersection_size"] = shared.size();
    report["targets"] = target_rows;
    write_file(stage.file("report", "open_report.json"), report.dump(2) + "\n");

    choices::save_plain(session.transcript(),
                        stage.file("choices_replay", "choices.replay.txt"));

    doc["stats"]["b_candidates"] = candidates.items.size();
    doc["stats"]["intersection_size"] = shared.size();
    if (!targets.empty()) doc["stats"]["top_target"] = targets.front().heading;
    out << "intersection of " << drilldowns.size() << " drill-downs: " << shared.size()
        << " headings\n";
    if (!targets.empty())
      out << "top target: " << targets.front().heading << " (source df "
          << targets.front().source_df << ")\n";
  });
}

int cmd_outlier(const Context& ctx, std::istream&, std::ostream& out) {
  return run_command("outlier", ctx.cfg, [&](nlohmann::json& doc, OutputStage& stage) {
    add_common_inputs(ctx, doc);
    auto loaded = load_corpus(ctx, doc, out);
    const auto& c = loaded.corpus;
    auto vocab = build_vocab(ctx, c, out);

    auto counts = vectorspace::bow_text(c, vocab);
    auto pruned = vectorspace::prune_min_df(counts, ctx.cfg.min_term_df);
    auto weighted = vectorspace::tfidf(pruned);
    out << "matrix after df >= " << ctx.cfg.min_term_df << " pruning: "
        << weighted.n_rows() << " x " << weighted.n_cols() << "\n";

    Rng rng(ctx.cfg.seed);
    auto result = outlier::detect(weighted, ctx.cfg.clusters, rng);

    outlier::write_report(weighted, result, stage.file("scatter", "scatter.csv"));

    std::vector<corpus::Document> outlier_docs;
    nlohmann::json by_domain = nlohmann::json::object();
    for (const auto& d : result.by_domain) {
      by_domain[std::string(1, corpus::domain_label(d.domain))] = d.outlier_ids.size();
      for (const auto& id : d.outlier_ids)
        for (const auto& docu : c.docs)
          if (docu.id == id && docu.domain == d.domain) outlier_docs.push_back(docu);
    }
    corpus::save_psv(outlier_docs, stage.file("outliers", "outliers.psv.gz"));

    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& s : result.cluster_summaries)
      clusters.push_back({{"cluster", s.cluster},
                          {"majority", std::string(1, corpus::domain_label(s.majority))},
                          {"size", s.size},
                          {"minority", s.minority_count}});
    doc["stats"]["clusters"] = clusters;
    doc["stats"]["outliers"] = by_domain;
    doc["stats"]["matrix_rows"] = weighted.n_rows();
    doc["stats"]["matrix_cols"] = weighted.n_cols();
    doc["stats"]["kmeans_iterations"] = result.clusters.iterations;
    for (const auto& d : result.by_domain)
      out << "outliers in " << (d.domain == corpus::Domain::C ? c.label_c : c.label_a)
          << ": " << d.outlier_ids.size() << "\n";
  });
}

int cmd_rajolink(const Context& ctx, std::istream& in, std::ostream& out) {
  return run_command("rajolink", ctx.cfg, [&](nlohmann::json& doc, OutputStage& stage) {
    add_common_inputs(ctx, doc);
    auto loaded = load_corpus(ctx, doc, out);
    const auto& c = loaded.corpus;
    auto map = load_semantic_map(ctx, doc);
    if (ctx.ds->rajolink_filter_types.empty())
      throw ConfigError("dataset '" + ctx.ds->key +
                        "' has no rare-term semantic types configured");

    auto ra = rajolink::ra_ranking(c, map, ctx.ds->rajolink_filter_types);
    ra.name = "ra";
    evalkit::write_ranking_csv(ra, stage.file("ra", "ra_ranking.csv"));
    out << "rare typed concepts (ascending aggregated TF-IDF): " << ra.items.size()
        << "\n";

    auto session = make_session(ctx, "ra", /*plain=*/false, doc, in, out);
    auto picks = session.pick("ra", ra, ctx.ds->ra_picks, canon_fn(ctx), "rare concept");

    std::vector<std::vector<corpus::Document>> snapshots;
    nlohmann::json pick_info = nlohmann::json::array();
    for (const auto& term : picks) {
      auto docs = load_snapshot(ctx, term, doc);
      out << "  " << term << ": " << docs.size() << " documents (rank "
          << *ra.position_of(term) << ")\n";
      pick_info.push_back({{"term", term},
                           {"position", *ra.position_of(term)},
                           {"snapshot_documents", docs.size()}});
      snapshots.push_back(std::move(docs));
    }

    auto jo = rajolink::jo_ranking(snapshots, ctx.prep);
    evalkit::write_ranking_csv(jo, stage.file("jo", "jo_ranking.csv"));
    out << "terms joining all " << snapshots.size() << " drill-downs: "
        << jo.items.size() << "\n";

    auto target = session.pick("jo", jo, 1, canon_fn(ctx), "joint term").front();
    const std::size_t target_pos = *jo.position_of(target);
    out << "chosen target: " << target << " (rank " << target_pos << ")\n";

    // Closing link step: bridge terms between the problem domain and the
    // target domain, with the gold list for orientation.
    auto vocab = build_vocab(ctx, c, out);
    auto gold = load_gold(ctx, doc);
    auto link = closed_abc::run(vocab, &gold);
    write_term_psv(link.b_terms, vocab, &gold, stage.file("link", "link_terms.psv"));

    nlohmann::json report;
    report["dataset"] = ctx.ds->key;
    report["ra_count"] = ra.items.size();
    report["ra_picks"] = pick_info;
    report["jo_count"] = jo.items.size();
    report["jo_target"] = {{"term", target}, {"position", target_pos}};
    report["link"] = {{"candidates", link.candidate_count()},
                      {"gold_found", link.gold_found},
                      {"gold_missed", link.gold_missed}};
    nlohmann::json input_hashes = nlohmann::json::object();
    for (const auto& [label, entry] : doc["inputs"].items())
      input_hashes[label] = entry["fnv64"];
    report["fixture_hashes"] = input_hashes;
    write_file(stage.file("report", "rajolink_report.json"), report.dump(2) + "\n");

    choices::save_records(session.transcript(),
                          stage.file("choices_replay", "choices.replay.txt"));

    doc["stats"]["ra_count"] = ra.items.size();
    doc["stats"]["jo_count"] = jo.items.size();
    doc["stats"]["jo_target"] = target;
    doc["stats"]["jo_target_position"] = target_pos;
    doc["stats"]["link_candidates"] = link.candidate_count();
  });
}

int cmd_linkpred(const Context& ctx, std::istream&, std::ostream& out) {
  return run_command("linkpred", ctx.cfg, [&](nlohmann::json& doc, OutputStage& stage) {
    if (ctx.ds->citations_file.empty())
      throw ConfigError("dataset '" + ctx.ds->key + "' has no citation fixture");

    // The network is sliced by the cited work's date, so the document list is
    // loaded without the retrieval cutoff: later documents are valid citers.
    const std::string corpus_path = ctx.cfg.corpus_path(*ctx.ds);
    manifest::add_input(doc, "corpus", corpus_path);
    auto loaded = corpus::load_psv(corpus_path, {}, std::nullopt);
    const auto& c = loaded.corpus;
    doc["stats"]["documents"] = c.docs.size();
    out << "loaded " << c.docs.size() << " documents as potential citers\n";

    const std::string cit_path = ctx.cfg.citations_path(*ctx.ds);
    if (!file_exists(cit_path))
      throw FixtureError("citation fixture not found: " + cit_path, cit_path);
    manifest::add_input(doc, "citations", cit_path);
    auto rows = linkpred::load_citations(cit_path);

    // Only rows citing a known document enter the network.
    std::vector<std::string> ids;
    ids.reserve(c.docs.size());
    for (const auto& d : c.docs) ids.push_back(d.id);
    std::sort(ids.begin(), ids.end());
    std::vector<linkpred::Citation> kept;
    kept.reserve(rows.size());
    std::size_t rejected = 0;
    for (auto& r : rows) {
      if (std::binary_search(ids.begin(), ids.end(), r.citing))
        kept.push_back(std::move(r));
      else
        ++rejected;
    }
    out << "citations: " << kept.size() << " rows kept, " << rejected
        << " citing unknown documents\n";

    auto eval = linkpred::build_eval(kept, ctx.ds->cutoff, ctx.cfg.test_size, ctx.cfg.seed);
    out << "training graph: " << eval.train.node_count() << " nodes, "
        << eval.train.edge_count() << " edges; " << eval.positive_count
        << " positive test pairs\n";

    auto results = linkpred::evaluate(eval);
    nlohmann::json measures = nlohmann::json::object();
    for (const auto& r : results) {
      evalkit::write_roc_csv(r.roc, stage.file("roc_" + r.name, "roc_" + r.name + ".csv"));
      nlohmann::json precision = nlohmann::json::object();
      for (const auto& [k, p] : r.precision_at) precision[std::to_string(k)] = p;
      measures[r.name] = {{"auc", r.auc}, {"precision_at", precision}};
      out << "  " << r.name << ": AUC " << evalkit::format_double(r.auc) << "\n";
    }

    nlohmann::json report;
    report["dataset"] = ctx.ds->key;
    report["seed"] = ctx.cfg.seed;
    report["citation_rows"] = kept.size();
    report["rejected_rows"] = rejected;
    report["train_nodes"] = eval.train.node_count();
    report["train_edges"] = eval.train.edge_count();
    report["positives"] = eval.positive_count;
    report["negatives"] = eval.pairs.size() - eval.positive_count;
    report["measures"] = measures;
    write_file(stage.file("report", "linkpred_report.json"), report.dump(2) + "\n");

    doc["stats"]["train_nodes"] = eval.train.node_count();
    doc["stats"]["train_edges"] = eval.train.edge_count();
    doc["stats"]["positives"] = eval.positive_count;
    doc["stats"]["rejected_citations"] = rejected;
    doc["stats"]["measures"] = measures;
  });
}

int cmd_validate(const Resolved& resolved, std::ostream& out) {
  std::vector<config::Finding> findings = resolved.findings;
  auto more = config::validate(resolved.config);
  findings.insert(findings.end(), more.begin(), more.end());
  if (findings.empty()) {
    out << "configuration ok: dataset '" << resolved.config.dataset
        << "', every fixture and resource present\n";
    return 0;
  }
  out << findings.size() << " problem(s):\n";
  for (const auto& f : findings) out << "  " << f.field << ": " << f.message << "\n";
  return 2;
}

}  // namespace

Resolved resolve(const CliOptions& options) {
  Resolved resolved;
  config::LoadReport report = options.config_file.empty()
                                  ? config::parse_text("", "<defaults>")
                                  : config::parse_file(options.config_file);
  resolved.config = report.config;
  resolved.findings = report.findings;
  config::apply_env(resolved.config, resolved.findings);

  if (!options.dataset.empty()) resolved.config.dataset = options.dataset;
  if (!options.out_dir.empty()) resolved.config.out_dir = options.out_dir;
  if (options.seed) resolved.config.seed = *options.seed;
  if (options.threads) {
    if (*options.threads == 0)
      resolved.findings.push_back({"run.threads", "must be at least 1"});
    else
      resolved.config.threads = *options.threads;
  }
  if (!options.choices_file.empty()) resolved.config.choices_file = options.choices_file;
  if (options.interactive) {
    resolved.config.interactive = true;
    if (!options.choices_file.empty())
      resolved.findings.push_back(
          {"choices.interactive", "replay file and interactive mode are mutually exclusive"});
  }
  return resolved;
}

int run(const CliOptions& options, std::istream& in, std::ostream& out) {
  Resolved resolved = resolve(options);
  if (options.command == "validate") return cmd_validate(resolved, out);

  if (!resolved.findings.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& f : resolved.findings) msg += "\n  " + f.field + ": " + f.message;
    throw ConfigError(msg);
  }
  if (resolved.config.dataset.empty())
    throw ConfigError("run.dataset: no dataset selected (use --dataset)");

  Context ctx = make_context(resolved.config);
  if (options.command == "ingest") return cmd_ingest(ctx, in, out);
  if (options.command == "closed") return cmd_closed(ctx, in, out);
  if (options.command == "crossbee") return cmd_crossbee(ctx, in, out);
  if (options.command == "open") return cmd_open(ctx, in, out);
  if (options.command == "outlier") return cmd_outlier(ctx, in, out);
  if (options.command == "rajolink") return cmd_rajolink(ctx, in, out);
  if (options.command == "linkpred") return cmd_linkpred(ctx, in, out);
  throw ConfigError("unknown command '" + options.command + "'");
}

}  // namespace lbd::pipeline
