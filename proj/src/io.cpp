#include "schubert/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schubert::io {

json chain_to_json(const LabeledChain& chain) {
  json steps = json::array();
  for (const auto& label : chain.labels()) steps.push_back({label.k, label.b});
  return {{"start", chain.start().to_string()}, {"steps", steps}, {"end", chain.end().to_string()}};
}

LabeledChain chain_from_json(const json& j) {
  const Permutation start = Permutation::parse(j.at("start").get<std::string>());
  std::vector<CoverLabel> labels;
  for (const auto& step : j.at("steps")) {
    if (!step.is_array() || step.size() != 2) throw std::invalid_argument("chain step must be [k, b]");
    labels.push_back({step[0].get<int>(), step[1].get<int>()});
  }
  if (j.contains("end")) {
    return LabeledChain::from_labels(start, labels, Permutation::parse(j.at("end").get<std::string>()));
  }
  // Without an end point, only chains to the top are recoverable.
  return LabeledChain::from_labels(start, labels, Permutation::longest(start.size()));
}

json rcgraph_to_json(const RcGraph& graph) {
  json cells = json::array();
  for (const auto& c : graph.crossings()) cells.push_back({c.k, c.b});
  return {{"n", graph.n()}, {"crossings", cells}};
}

RcGraph rcgraph_from_json(const json& j) {
  std::vector<CoverLabel> cells;
  for (const auto& c : j.at("crossings")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("crossing must be [k, b]");
    cells.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  return RcGraph(j.at("n").get<int>(), std::move(cells));
}

json polynomial_to_json(const Polynomial& p, int n) {
  if (n < 0) n = p.num_vars();
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"exp", m.exponents(n)}, {"coef", c}});
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Polynomial p;
  for (const auto& term : j) {
    const auto exps = term.at("exp").get<std::vector<int>>();
    p.add_term(Monomial(exps), term.at("coef").get<Coefficient>());
  }
  return p;
}

json expansion_to_json(const SchubertExpansion& f) {
  json out = json::object();
  for (const auto& [w, c] : f.terms()) out[w.to_string()] = c;
  return out;
}

SchubertExpansion expansion_from_json(const json& j, int n) {
  if (!j.is_object()) throw std::invalid_argument("expansion JSON must be an object");
  SchubertExpansion f(n);
  for (const auto& [key, value] : j.items()) f.add(embed(Permutation::parse(key), n), value.get<Coefficient>());
  return f;
}

json composition_to_json(const Composition& alpha) { return json(alpha); }

Composition composition_from_json(const json& j) { return j.get<Composition>(); }

Composition parse_composition(const std::string& text) {
  Composition alpha;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    const int value = std::stoi(part, &used);
    if (used != part.size() || value < 0) throw std::invalid_argument("bad composition '" + text + "'");
    alpha.push_back(value);
  }
  return alpha;
}

json lr_record_to_json(const LrTableRecord& r) {
  return {{"n", r.n}, {"u", r.u}, {"v", r.v}, {"w", r.w}, {"c", r.c}};
}

LrTableRecord lr_record_from_json(const json& j) {
  LrTableRecord r{j.at("n").get<int>(), j.at("u").get<std::string>(), j.at("v").get<std::string>(),
                  j.at("w").get<std::string>(), j.at("c").get<Coefficient>()};
  const Permutation u = Permutation::parse(r.u);
  const Permutation v = Permutation::parse(r.v);
  const Permutation w = Permutation::parse(r.w);
  if (r.c <= 0) throw std::invalid_argument("LR record with nonpositive coefficient");
  if (length(u) + length(v) != length(w)) throw std::invalid_argument("LR record violates l(u) + l(v) = l(w)");
  if (u.size() > r.n || v.size() > r.n || w.size() > r.n) throw std::invalid_argument("LR record outside S_n");
  return r;
}

std::vector<LrTableRecord> lr_records(const Permutation& u, const Permutation& v, const SchubertExpansion& table) {
  std::vector<LrTableRecord> rows;
  const int n = table.n();
  for (const auto& [w, c] : table.terms()) {
    rows.push_back({n, embed(u, n).to_string(), embed(v, n).to_string(), w.to_string(), c});
  }
  return rows;
}

LrCache::LrCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      LrTableRecord r = lr_record_from_json(json::parse(line));
      if (seen_.insert(r.key()).second) records_.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::invalid_argument(path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

bool LrCache::contains(const LrTableRecord& record) const { return seen_.count(record.key()) > 0; }

std::size_t LrCache::append(const std::vector<LrTableRecord>& rows) {
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path_.string() + " for appending");
  std::size_t written = 0;
  for (const auto& r : rows) {
    if (!seen_.insert(r.key()).second) continue;
    out << lr_record_to_json(r).dump() << '\n';
    records_.push_back(r);
    ++written;
  }
  return written;
}

}  // namespace schubert::io
