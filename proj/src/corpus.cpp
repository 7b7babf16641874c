#include "lbd/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lbd/errors.hpp"
#include "lbd/gzio.hpp"
#include "lbd/textprep.hpp"

namespace lbd::corpus {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<Domain> parse_domain(const std::string& s) {
  if (s == "A" || s == "a") return Domain::A;
  if (s == "C" || s == "c") return Domain::C;
  return std::nullopt;
}

std::size_t DomainPairCorpus::count(Domain d) const {
  return static_cast<std::size_t>(std::count_if(
      docs.begin(), docs.end(), [d](const Document& doc) { return doc.domain == d; }));
}

std::vector<const Document*> DomainPairCorpus::side(Domain d) const {
  std::vector<const Document*> out;
  for (const auto& doc : docs)
    if (doc.domain == d) out.push_back(&doc);
  return out;
}

LoadResult load_psv(const std::string& path, const PsvSchema& schema,
                    std::optional<Date> cutoff) {
  GzReader reader(path);
  LoadResult result;
  result.corpus.cutoff = cutoff;

  std::string line;
  if (!reader.getline(line)) throw DataError("empty snapshot: " + path);
  auto header = split(line, '|');
  auto column = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      throw DataError("snapshot " + path + " is missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t col_id = column(schema.id);
  const std::size_t col_domain = column(schema.domain);
  const std::size_t col_date = column(schema.pub_date);
  const std::size_t col_title = column(schema.title);
  const std::size_t col_abstract = column(schema.abstract);
  const std::size_t col_mesh = column(schema.mesh);
  const std::size_t width = header.size();

  std::unordered_set<std::string> seen_a, seen_c;
  std::size_t line_no = 1;
  while (reader.getline(line)) {
    ++line_no;
    if (line.empty()) continue;
    auto reject = [&](std::string reason) {
      result.report.rejected.push_back({line_no, std::move(reason)});
    };
    auto fields = split(line, '|');
    if (fields.size() != width) {
      reject("malformed row: expected " + std::to_string(width) + " fields, got " +
             std::to_string(fields.size()));
      continue;
    }
    Document doc;
    doc.id = trim(fields[col_id]);
    if (doc.id.empty()) {
      reject("missing id");
      continue;
    }
    auto dom = parse_domain(trim(fields[col_domain]));
    if (!dom) {
      reject("unknown domain label '" + trim(fields[col_domain]) + "'");
      continue;
    }
    doc.domain = *dom;
    auto date = Date::parse(trim(fields[col_date]));
    if (!date) {
      reject("unparsable date '" + trim(fields[col_date]) + "'");
      continue;
    }
    if (cutoff && *date > *cutoff) {
      reject("dated after cutoff: " + date->to_string());
      continue;
    }
    doc.pub_date = *date;
    auto& seen = doc.domain == Domain::A ? seen_a : seen_c;
    if (!seen.insert(doc.id).second) {
      reject("duplicate id within domain: " + doc.id);
      continue;
    }
    doc.title = fields[col_title];
    doc.abstract = fields[col_abstract];
    for (auto& h : split(fields[col_mesh], ';')) {
      auto t = trim(h);
      if (!t.empty()) doc.mesh.push_back(std::move(t));
    }
    result.corpus.docs.push_back(std::move(doc));
    ++result.report.accepted;
  }
  return result;
}

void save_psv(const std::vector<Document>& docs, const std::string& path) {
  std::ostringstream out;
  out << "pmid|domain|pub_date|title|abstract|mesh\n";
  for (const auto& d : docs) {
    out << d.id << '|' << domain_label(d.domain) << '|' << d.pub_date.to_string() << '|'
        << d.title << '|' << d.abstract << '|';
    for (std::size_t i = 0; i < d.mesh.size(); ++i) {
      if (i) out << ';';
      out << d.mesh[i];
    }
    out << '\n';
  }
  const std::string data = out.str();
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    GzWriter w(path);
    w.write(data);
    w.close();
  } else {
    write_file(path, data);
  }
}

DomainPairCorpus exclude_shared_records(const DomainPairCorpus& in) {
  std::unordered_map<std::string, std::uint8_t> presence;
  for (const auto& d : in.docs)
    presence[d.id] |= d.domain == Domain::A ? 1 : 2;
  DomainPairCorpus out = in;
  out.docs.clear();
  for (const auto& d : in.docs)
    if (presence[d.id] != 3) out.docs.push_back(d);
  return out;
}

bool GoldStandard::contains(const std::string& normalized_term) const {
  return std::find(b_terms.begin(), b_terms.end(), normalized_term) != b_terms.end();
}

GoldStandard load_gold(const std::string& dataset_name, const std::string& gold_dir,
                       const textprep::PreprocessConfig& config) {
  const std::string path = gold_dir + "/" + dataset_name + ".gold.txt";
  std::ifstream in(path);
  if (!in) throw FixtureError("gold standard not found: " + path, path);
  GoldStandard gold;
  gold.dataset_name = dataset_name;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto norm = textprep::normalize_term(line, config);
    if (norm.empty()) continue;
    if (!gold.contains(norm)) gold.b_terms.push_back(std::move(norm));
  }
  if (gold.b_terms.empty()) throw DataError("gold standard is empty: " + path);
  return gold;
}

}  // namespace lbd::corpus
