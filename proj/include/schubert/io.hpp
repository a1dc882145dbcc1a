#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "schubert/chains.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/rcgraph.hpp"
#include "schubert/schubert.hpp"

namespace schubert::io {

using nlohmann::json;

// {"start": "1432", "steps": [[1,1],[2,1],[2,2]], "end": "4321"}
json chain_to_json(const LabeledChain& chain);
LabeledChain chain_from_json(const json& j);

// {"n": 4, "crossings": [[1,3],[1,2],[3,1]]}, crossings in reading order.
json rcgraph_to_json(const RcGraph& graph);
RcGraph rcgraph_from_json(const json& j);

// [{"exp": [a1, ..., an], "coef": c}, ...] in increasing monomial order.
// `n` fixes the exponent vector length; it defaults to p.num_vars().
json polynomial_to_json(const Polynomial& p, int n = -1);
Polynomial polynomial_from_json(const json& j);

// {"2413": 1, ...}, keys sorted as strings.
json expansion_to_json(const SchubertExpansion& f);
SchubertExpansion expansion_from_json(const json& j, int n);

json composition_to_json(const Composition& alpha);
Composition composition_from_json(const json& j);
// "1,2,0"
Composition parse_composition(const std::string& text);

// One row of a persisted Littlewood-Richardson table.
struct LrTableRecord {
  int n = 0;
  std::string u, v, w;
  Coefficient c = 0;

  auto key() const { return std::tie(n, u, v, w); }
  bool operator==(const LrTableRecord&) const = default;
};

json lr_record_to_json(const LrTableRecord& record);
// Throws std::invalid_argument for malformed rows or rows violating c > 0 and
// l(u) + l(v) = l(w).
LrTableRecord lr_record_from_json(const json& j);

std::vector<LrTableRecord> lr_records(const Permutation& u, const Permutation& v, const SchubertExpansion& table);

// Newline-delimited JSON, append-only. Duplicate rows collapse on load.
class LrCache {
 public:
  explicit LrCache(std::filesystem::path path);

  const std::vector<LrTableRecord>& records() const { return records_; }
  bool contains(const LrTableRecord& record) const;

  // Appends the rows not yet present; returns how many were written.
  std::size_t append(const std::vector<LrTableRecord>& rows);

 private:
  std::filesystem::path path_;
  std::vector<LrTableRecord> records_;
  std::set<std::tuple<int, std::string, std::string, std::string>> seen_;
};

}  // namespace schubert::io
