#include "schubert/rcgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace schubert {

namespace {

// Reading order: (k, b) before (j, a) iff k < j, or k == j and b > a.
bool reads_before(const CoverLabel& x, const CoverLabel& y) {
  return x.k != y.k ? x.k < y.k : x.b > y.b;
}

}  // namespace

RcGraph::RcGraph(int n, std::vector<CoverLabel> crossings) : n_(n), crossings_(std::move(crossings)) {
  if (n < 1) throw std::invalid_argument("rc-graph size must be >= 1");
  for (const auto& c : crossings_) {
    if (c.k < 1 || c.b < 1 || c.k + c.b > n) {
      throw std::invalid_argument("crossing (" + std::to_string(c.k) + "," + std::to_string(c.b) +
                                  ") lies outside the staircase");
    }
  }
  std::sort(crossings_.begin(), crossings_.end(), reads_before);
  if (std::adjacent_find(crossings_.begin(), crossings_.end()) != crossings_.end()) {
    throw std::invalid_argument("repeated crossing");
  }
}

RcGraph RcGraph::full_staircase(int n) {
  std::vector<CoverLabel> cells;
  for (int k = 1; k < n; ++k) {
    for (int b = 1; k + b <= n; ++b) cells.push_back({k, b});
  }
  return RcGraph(n, std::move(cells));
}

bool RcGraph::contains(CoverLabel cell) const {
  return std::binary_search(crossings_.begin(), crossings_.end(), cell, reads_before);
}

std::vector<int> RcGraph::word() const {
  std::vector<int> w;
  w.reserve(crossings_.size());
  for (const auto& c : crossings_) w.push_back(c.k + c.b - 1);
  return w;
}

Permutation word_product(int n, const std::vector<int>& word) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  for (int a : word) {
    if (a < 1 || a >= n) throw std::invalid_argument("simple reflection index out of range");
    std::swap(e[a - 1], e[a]);
  }
  return Permutation(std::move(e));
}

bool RcGraph::is_valid() const {
  // Reduced iff every step creates a new inversion.
  std::vector<int> e(n_);
  for (int i = 0; i < n_; ++i) e[i] = i + 1;
  for (const auto& c : crossings_) {
    const int a = c.k + c.b - 1;
    if (e[a - 1] > e[a]) return false;
    std::swap(e[a - 1], e[a]);
  }
  return true;
}

Permutation RcGraph::perm() const {
  if (!is_valid()) throw std::invalid_argument("rc-graph word is not reduced");
  return word_product(n_, word());
}

std::vector<int> RcGraph::monomial() const {
  std::vector<int> exps(n_, 0);
  for (const auto& c : crossings_) ++exps[c.k - 1];
  return exps;
}

std::string RcGraph::render_ascii() const {
  std::string out;
  for (int k = 1; k < n_; ++k) {
    for (int b = 1; k + b <= n_; ++b) {
      if (b > 1) out.push_back(' ');
      out.push_back(contains({k, b}) ? '+' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

LabeledChain chain_of_rcgraph(const RcGraph& graph) {
  const int n = graph.n();
  LabeledChain chain(graph.perm());
  std::vector<CoverLabel> current = graph.crossings();
  for (int k = 1; k < n; ++k) {
    for (int b = 1; k + b <= n; ++b) {
      if (graph.contains({k, b})) continue;
      current.push_back({k, b});
      RcGraph next(n, current);
      // Every greedy intermediate stays an rc-graph covering the previous one.
      if (!next.is_valid()) throw std::logic_error("greedy rc-graph completion left the staircase of rc-graphs");
      chain.push({k, b}, next.perm());
    }
  }
  return chain;
}

RcGraph rcgraph_of_chain(const LabeledChain& chain) {
  const int n = chain.n();
  if (chain.end() != Permutation::longest(n)) {
    throw std::invalid_argument("chain does not end at the longest permutation");
  }
  if (!chain.is_increasing()) throw std::invalid_argument("chain is not increasing");
  std::vector<CoverLabel> cells;
  auto labels = chain.labels();
  for (int k = 1; k < n; ++k) {
    for (int b = 1; k + b <= n; ++b) {
      if (!std::binary_search(labels.begin(), labels.end(), CoverLabel{k, b})) cells.push_back({k, b});
    }
  }
  return RcGraph(n, std::move(cells));
}

std::optional<RcGraph> RcGraphs::next() {
  auto chain = chains_.next();
  if (!chain) return std::nullopt;
  return rcgraph_of_chain(*chain);
}

}  // namespace schubert
