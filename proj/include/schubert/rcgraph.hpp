#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/chains.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

// A subset of the staircase {(k, b) : k, b >= 1, k + b <= n}. Crossings are
// held in reading order: rows top to bottom, each row right to left.
class RcGraph {
 public:
  RcGraph() = default;

  // Throws std::invalid_argument for cells outside the staircase or repeats.
  RcGraph(int n, std::vector<CoverLabel> crossings);

  static RcGraph full_staircase(int n);

  int n() const { return n_; }
  const std::vector<CoverLabel>& crossings() const { return crossings_; }
  std::size_t size() const { return crossings_.size(); }
  bool contains(CoverLabel cell) const;

  // d(R): simple reflection indices k + b - 1 in reading order.
  std::vector<int> word() const;

  // True iff word() is a reduced word.
  bool is_valid() const;

  // Product of the simple transpositions along word(), applied left to right
  // as position swaps. Throws std::invalid_argument if the word is not reduced.
  Permutation perm() const;

  // Exponent of x_i is the number of crossings in row i (n entries).
  std::vector<int> monomial() const;

  // One line per row, "+" for a crossing and "." otherwise.
  std::string render_ascii() const;

  bool operator==(const RcGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<CoverLabel> crossings_;
};

// Product of simple transpositions s_a = (a, a+1) applied left to right.
Permutation word_product(int n, const std::vector<int>& word);

// The increasing chain from w(R) to w0 whose labels are the staircase cells
// missing from R, added greedily in lexicographic order.
LabeledChain chain_of_rcgraph(const RcGraph& graph);

// Complement of the label set of an increasing chain ending at w0. Throws
// std::invalid_argument for chains that are not increasing or do not end there.
RcGraph rcgraph_of_chain(const LabeledChain& chain);

// R(w), pulled one at a time from the chains to the top.
class RcGraphs {
 public:
  explicit RcGraphs(const Permutation& w) : chains_(w) {}

  std::optional<RcGraph> next();

  const TraversalStats& stats() const { return chains_.stats(); }

 private:
  ChainsToTop chains_;
};

}  // namespace schubert
