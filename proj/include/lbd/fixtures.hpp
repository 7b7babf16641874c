#pragma once

// Deterministic synthetic fixture generator. Builds every corpus, semantic
// map, drill-down snapshot, and citation file the dataset registry points at,
// with term/heading inventories engineered to hit the documented corpus
// statistics exactly. Generation is cached behind a version marker so test
// runs only pay the cost once.

#include <iosfwd>
#include <string>

namespace lbd::fixtures {

// Writes all fixtures into `data_dir` (created if missing). Returns true when
// files were (re)generated, false when the cached set was already current.
// `force` ignores the cache marker.
bool generate_all(const std::string& data_dir, bool force, std::ostream& log);

}  // namespace lbd::fixtures
