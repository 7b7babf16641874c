#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lbd/date.hpp"

namespace lbd::textprep {
struct PreprocessConfig;
}

namespace lbd::corpus {

enum class Domain : std::uint8_t { A, C };

inline char domain_label(Domain d) { return d == Domain::A ? 'A' : 'C'; }
std::optional<Domain> parse_domain(const std::string& s);

struct Document {
  std::string id;
  Domain domain = Domain::C;
  Date pub_date;
  std::string title;
  std::string abstract;
  std::vector<std::string> mesh;  // MeSH headings, may be empty
};

// A pair of document sets under one research question: the problem domain (C)
// and the candidate domain (A).
struct DomainPairCorpus {
  std::string name;             // dataset key, e.g. "rs-dfo"
  std::string label_c;          // human-readable domain names
  std::string label_a;
  std::vector<std::string> query_terms_c;  // terms used to retrieve each side
  std::vector<std::string> query_terms_a;
  std::optional<Date> cutoff;   // inclusive upper bound on pub_date
  std::vector<Document> docs;

  std::size_t count(Domain d) const;
  std::vector<const Document*> side(Domain d) const;
};

struct RowRejection {
  std::size_t line = 0;  // 1-based line number in the file
  std::string reason;
};

struct LoadReport {
  std::size_t accepted = 0;
  std::vector<RowRejection> rejected;
};

struct LoadResult {
  DomainPairCorpus corpus;
  LoadReport report;
};

// Column layout of a PSV snapshot. Defaults to the standard header; a file's
// header row is matched against these names to locate each field.
struct PsvSchema {
  std::string id = "pmid";
  std::string domain = "domain";
  std::string pub_date = "pub_date";
  std::string title = "title";
  std::string abstract = "abstract";
  std::string mesh = "mesh";
};

// Loads a gzip-compressed pipe-separated snapshot. Malformed rows are
// reported, never fatal; an unreadable file or corrupt stream throws.
// When `cutoff` is set, rows dated after it are rejected.
LoadResult load_psv(const std::string& path, const PsvSchema& schema = {},
                    std::optional<Date> cutoff = std::nullopt);

// Writes documents in the standard schema (gzip when the path ends in .gz).
void save_psv(const std::vector<Document>& docs, const std::string& path);

// Removes every document whose id appears in both domains (those records
// carry no discriminating signal between the sides).
DomainPairCorpus exclude_shared_records(const DomainPairCorpus& in);

struct GoldStandard {
  std::string dataset_name;
  std::vector<std::string> b_terms;  // normalized, file order, duplicates dropped

  bool contains(const std::string& normalized_term) const;
};

// Reads <gold_dir>/<dataset_name>.gold.txt, one raw term per line, and stores
// each term in the normalized form produced by the given preprocessing config.
GoldStandard load_gold(const std::string& dataset_name, const std::string& gold_dir,
                       const textprep::PreprocessConfig& config);

}  // namespace lbd::corpus
