#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

// Weak composition (alpha_1, ..., alpha_{n-1}).
using Composition = std::vector<int>;

// A saturated chain in the labeled Bruhat order. The intermediate permutations
// are kept alongside the labels: a label alone does not always determine the
// cover it sits on.
class LabeledChain {
 public:
  LabeledChain() = default;
  explicit LabeledChain(Permutation start);

  // Appends end() -> target with the given label. Throws std::invalid_argument
  // if the label is not one of labeled_edges(end(), target).
  void push(CoverLabel label, Permutation target);

  // Rebuilds a chain from its labels when only the endpoints are known.
  // Throws std::invalid_argument when no chain or more than one chain matches.
  static LabeledChain from_labels(const Permutation& start,
                                  std::span<const CoverLabel> labels,
                                  const Permutation& end);

  const Permutation& start() const { return path_.front(); }
  const Permutation& end() const { return path_.back(); }
  std::span<const CoverLabel> labels() const { return labels_; }
  std::span<const Permutation> path() const { return path_; }
  std::size_t size() const { return labels_.size(); }
  int n() const { return start().size(); }

  // Strictly increasing labels, lexicographically.
  bool is_increasing() const;

  bool operator==(const LabeledChain&) const = default;

 private:
  std::vector<Permutation> path_;
  std::vector<CoverLabel> labels_;
};

// Exponents of x_1..x_{n-1}: how often each i is the first coordinate of a label.
std::vector<int> chain_monomial(const LabeledChain& chain);

// Same data as chain_monomial, read as a composition.
Composition chain_type(const LabeledChain& chain);

// Work counters for a traversal.
struct TraversalStats {
  std::uint64_t nodes = 0;      // tree nodes entered, leaves included
  std::uint64_t scanned = 0;    // positions inspected while branching
  std::uint64_t leaves = 0;     // chains emitted
};

// Every increasing chain from u to w, in lexicographic order of label
// sequences. Distinct chains with the same label sequence are emitted
// together, ordered by their sequences of swapped positions. Empty when u is
// not below w.
class IncreasingChains {
 public:
  IncreasingChains(const Permutation& u, const Permutation& w);

  std::optional<LabeledChain> next();

 private:
  struct Node {
    std::vector<int> perm;
    std::size_t parent = 0;                 // index into the previous frame
    std::vector<std::pair<int, int>> covers;  // (i, j) with u * (i, j) <= target
  };
  // All nodes reached by one label sequence.
  struct Frame {
    std::vector<Node> nodes;
    CoverLabel label;  // label of the edges into this frame
    int length = 0;
    std::vector<CoverLabel> next_labels;
    std::size_t next_label = 0;
    std::size_t next_emit = 0;
    std::vector<std::size_t> emit;
  };

  void push_frame(std::vector<Node> nodes, CoverLabel label, int length);
  LabeledChain materialize(std::size_t node) const;

  Permutation target_;
  int target_length_ = 0;
  std::vector<Frame> stack_;
};

// Increasing chains from w to the longest permutation. Branches at a node u
// are the covers u -> u * (k, l) where k is the first position with
// u(k) + k < n + 1, tried in increasing order of l.
class ChainsToTop {
 public:
  explicit ChainsToTop(const Permutation& w);

  std::optional<LabeledChain> next();

  const TraversalStats& stats() const { return stats_; }

 private:
  struct Frame {
    std::vector<int> perm;
    CoverLabel label;  // label of the edge into this node
    int k = 0;         // branching position, 0 at the top element
    int next_l = 0;
    int ceiling = 0;
    bool emit = false;
  };

  void push_frame(std::vector<int> perm, CoverLabel label);
  LabeledChain materialize() const;

  int n_ = 0;
  std::vector<Frame> stack_;
  TraversalStats stats_;
};

// All of ChainsToTop(w), materialized. With `parallel`, the root's branches
// are traversed concurrently and concatenated back in branch order, so the
// result is identical to the sequential one.
std::vector<LabeledChain> collect_chains_to_top(const Permutation& w, bool parallel = false);

// I_alpha(u, w). `alpha` is compared after padding with zeros to n - 1 parts.
std::int64_t count_by_type(const Permutation& u, const Permutation& w, const Composition& alpha);

// Number of increasing chains from u to w, grouped by type.
std::map<Composition, std::int64_t> type_counts(const Permutation& u, const Permutation& w);

}  // namespace schubert
