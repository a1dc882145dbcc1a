#include "schubert/chains.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>
#include <utility>

namespace schubert {

LabeledChain::LabeledChain(Permutation start) { path_.push_back(std::move(start)); }

void LabeledChain::push(CoverLabel label, Permutation target) {
  const auto allowed = labeled_edges(end(), target);
  if (std::find(allowed.begin(), allowed.end(), label) == allowed.end()) {
    throw std::invalid_argument("label is not on the cover " + end().to_string() + " -> " +
                                target.to_string());
  }
  labels_.push_back(label);
  path_.push_back(std::move(target));
}

namespace {

void decode_labels(std::vector<int>& perm, std::span<const CoverLabel> labels, std::size_t step,
                   const Permutation& end, std::vector<std::vector<int>>& trail,
                   std::vector<std::vector<std::vector<int>>>& found) {
  if (found.size() > 1) return;
  if (step == labels.size()) {
    if (std::equal(perm.begin(), perm.end(), end.entries().begin(), end.entries().end())) {
      found.push_back(trail);
    }
    return;
  }
  const int n = static_cast<int>(perm.size());
  const auto [k, b] = labels[step];
  if (k < 1 || k >= n || b < 1 || b > n) return;
  const int i = static_cast<int>(std::find(perm.begin(), perm.end(), b) - perm.begin()) + 1;
  if (i > k) return;
  for (int j = k + 1; j <= n; ++j) {
    if (!is_cover_swap(perm, i, j)) continue;
    std::swap(perm[i - 1], perm[j - 1]);
    trail.push_back(perm);
    decode_labels(perm, labels, step + 1, end, trail, found);
    trail.pop_back();
    std::swap(perm[i - 1], perm[j - 1]);
  }
}

}  // namespace

LabeledChain LabeledChain::from_labels(const Permutation& start,
                                       std::span<const CoverLabel> labels,
                                       const Permutation& end) {
  if (start.size() != end.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> perm(start.entries().begin(), start.entries().end());
  std::vector<std::vector<int>> trail;
  std::vector<std::vector<std::vector<int>>> found;
  decode_labels(perm, labels, 0, end, trail, found);
  if (found.empty()) throw std::invalid_argument("labels do not describe a chain to " + end.to_string());
  if (found.size() > 1) throw std::invalid_argument("labels describe more than one chain");
  LabeledChain chain(start);
  for (std::size_t s = 0; s < labels.size(); ++s) {
    chain.labels_.push_back(labels[s]);
    chain.path_.emplace_back(std::move(found[0][s]));
  }
  return chain;
}

bool LabeledChain::is_increasing() const {
  for (std::size_t s = 1; s < labels_.size(); ++s) {
    if (!(labels_[s - 1] < labels_[s])) return false;
  }
  return true;
}

std::vector<int> chain_monomial(const LabeledChain& chain) {
  std::vector<int> exps(std::max(chain.n() - 1, 0), 0);
  for (const auto& label : chain.labels()) ++exps[label.k - 1];
  return exps;
}

Composition chain_type(const LabeledChain& chain) { return chain_monomial(chain); }

// ---------------------------------------------------------------------------

IncreasingChains::IncreasingChains(const Permutation& u, const Permutation& w)
    : target_(w), target_length_(length(w)) {
  if (bruhat_leq(u, w)) {
    Node root;
    root.perm.assign(u.entries().begin(), u.entries().end());
    push_frame({std::move(root)}, {0, 0}, length(u));
  }
}

void IncreasingChains::push_frame(std::vector<Node> nodes, CoverLabel label, int len) {
  Frame frame;
  frame.label = label;
  frame.length = len;
  if (len == target_length_) {
    for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
      if (std::equal(nodes[idx].perm.begin(), nodes[idx].perm.end(), target_.entries().begin())) {
        frame.emit.push_back(idx);
      }
    }
  } else {
    std::set<CoverLabel> labels;
    for (auto& node : nodes) {
      auto& perm = node.perm;
      const int n = static_cast<int>(perm.size());
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (!is_cover_swap(perm, i, j)) continue;
          // Labels (k, perm(i)) grow with k, so the admissible k form a suffix.
          const int b = perm[i - 1];
          int k_min = i;
          if (label.k >= i) k_min = label.b < b ? label.k : label.k + 1;
          if (k_min >= j) continue;
          std::swap(perm[i - 1], perm[j - 1]);
          const bool below = bruhat_leq(Permutation(perm), target_);
          std::swap(perm[i - 1], perm[j - 1]);
          if (!below) continue;
          node.covers.emplace_back(i, j);
          for (int k = k_min; k < j; ++k) labels.insert({k, b});
        }
      }
    }
    frame.next_labels.assign(labels.begin(), labels.end());
  }
  frame.nodes = std::move(nodes);
  stack_.push_back(std::move(frame));
}

LabeledChain IncreasingChains::materialize(std::size_t node) const {
  std::vector<std::size_t> trail(stack_.size());
  for (std::size_t s = stack_.size(); s-- > 0;) {
    trail[s] = node;
    node = stack_[s].nodes[node].parent;
  }
  LabeledChain chain(Permutation(stack_.front().nodes[trail[0]].perm));
  for (std::size_t s = 1; s < stack_.size(); ++s) {
    chain.push(stack_[s].label, Permutation(stack_[s].nodes[trail[s]].perm));
  }
  return chain;
}

std::optional<LabeledChain> IncreasingChains::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.next_emit < top.emit.size()) return materialize(top.emit[top.next_emit++]);
    if (top.next_label == top.next_labels.size()) {
      stack_.pop_back();
      continue;
    }
    const CoverLabel label = top.next_labels[top.next_label++];
    std::vector<Node> children;
    for (std::size_t p = 0; p < top.nodes.size(); ++p) {
      const auto& parent = top.nodes[p];
      for (const auto& [i, j] : parent.covers) {
        if (parent.perm[i - 1] != label.b || label.k < i || label.k >= j) continue;
        Node child;
        child.perm = parent.perm;
        std::swap(child.perm[i - 1], child.perm[j - 1]);
        child.parent = p;
        children.push_back(std::move(child));
      }
    }
    push_frame(std::move(children), label, top.length + 1);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ChainsToTop::ChainsToTop(const Permutation& w) : n_(w.size()) {
  push_frame(std::vector<int>(w.entries().begin(), w.entries().end()), {0, 0});
}

void ChainsToTop::push_frame(std::vector<int> perm, CoverLabel label) {
  ++stats_.nodes;
  Frame frame;
  frame.label = label;
  // Positions before k already hold n, n-1, ... as in the longest element.
  int k = label.k > 0 ? label.k : 1;
  while (k <= n_ && perm[k - 1] + k == n_ + 1) {
    ++k;
    ++stats_.scanned;
  }
  if (k > n_ || k == n_) {
    frame.emit = true;
  } else {
    frame.k = k;
    frame.next_l = k + 1;
    frame.ceiling = n_ + 1;
  }
  frame.perm = std::move(perm);
  stack_.push_back(std::move(frame));
}

LabeledChain ChainsToTop::materialize() const {
  LabeledChain chain(Permutation(stack_.front().perm));
  for (std::size_t s = 1; s < stack_.size(); ++s) {
    chain.push(stack_[s].label, Permutation(stack_[s].perm));
  }
  return chain;
}

std::optional<LabeledChain> ChainsToTop::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.emit) {
      top.emit = false;
      top.k = 0;
      ++stats_.leaves;
      return materialize();
    }
    if (top.k == 0) {
      stack_.pop_back();
      continue;
    }
    // Next admissible l: u(l) > u(k) and below every partner already passed.
    const int b = top.perm[top.k - 1];
    int l = top.next_l;
    while (l <= n_) {
      ++stats_.scanned;
      const int v = top.perm[l - 1];
      if (v > b && v < top.ceiling) break;
      ++l;
    }
    if (l > n_) {
      stack_.pop_back();
      continue;
    }
    top.ceiling = top.perm[l - 1];
    top.next_l = l + 1;
    std::vector<int> child = top.perm;
    std::swap(child[top.k - 1], child[l - 1]);
    const CoverLabel label{top.k, b};
    push_frame(std::move(child), label);
  }
  return std::nullopt;
}

std::vector<LabeledChain> collect_chains_to_top(const Permutation& w, bool parallel) {
  std::vector<LabeledChain> out;
  if (!parallel) {
    ChainsToTop stream(w);
    while (auto chain = stream.next()) out.push_back(std::move(*chain));
    return out;
  }
  const int n = w.size();
  int k = 1;
  while (k <= n && w(k) + k == n + 1) ++k;
  if (k >= n) return {LabeledChain(w)};
  // The subtree below a branch only depends on the child permutation.
  std::vector<std::pair<CoverLabel, Permutation>> roots;
  int ceiling = n + 1;
  for (int l = k + 1; l <= n; ++l) {
    if (w(l) > w(k) && w(l) < ceiling) {
      roots.emplace_back(CoverLabel{k, w(k)}, w.swap_positions(k, l));
      ceiling = w(l);
    }
  }
  std::vector<std::future<std::vector<LabeledChain>>> parts;
  for (const auto& [label, child] : roots) {
    parts.push_back(std::async(std::launch::async, [&w, label, child] {
      std::vector<LabeledChain> chains;
      ChainsToTop stream(child);
      while (auto tail = stream.next()) {
        LabeledChain chain(w);
        chain.push(label, child);
        for (std::size_t s = 0; s < tail->size(); ++s) {
          chain.push(tail->labels()[s], tail->path()[s + 1]);
        }
        chains.push_back(std::move(chain));
      }
      return chains;
    }));
  }
  for (auto& part : parts) {
    auto chains = part.get();
    std::move(chains.begin(), chains.end(), std::back_inserter(out));
  }
  return out;
}

std::map<Composition, std::int64_t> type_counts(const Permutation& u, const Permutation& w) {
  std::map<Composition, std::int64_t> counts;
  IncreasingChains stream(u, w);
  while (auto chain = stream.next()) ++counts[chain_type(*chain)];
  return counts;
}

std::int64_t count_by_type(const Permutation& u, const Permutation& w, const Composition& alpha) {
  Composition padded = alpha;
  const std::size_t parts = std::max(u.size() - 1, 0);
  if (padded.size() > parts) {
    for (std::size_t i = parts; i < padded.size(); ++i) {
      if (padded[i] != 0) return 0;
    }
  }
  padded.resize(parts, 0);
  std::int64_t count = 0;
  IncreasingChains stream(u, w);
  while (auto chain = stream.next()) {
    if (chain_type(*chain) == padded) ++count;
  }
  return count;
}

}  // namespace schubert
