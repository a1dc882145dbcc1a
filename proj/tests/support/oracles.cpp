#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace schubert::oracle {

int inversions(const std::vector<int>& e) {
  int count = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) count += e[i] > e[j];
  }
  return count;
}

std::vector<std::vector<int>> covers_by_length(const std::vector<int>& u) {
  std::vector<std::vector<int>> out;
  const int base = inversions(u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      auto w = u;
      std::swap(w[i], w[j]);
      if (inversions(w) == base + 1) out.push_back(w);
    }
  }
  return out;
}

bool bruhat_leq_bfs(const Permutation& u, const Permutation& w) {
  const std::vector<int> start(u.entries().begin(), u.entries().end());
  const std::vector<int> goal(w.entries().begin(), w.entries().end());
  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur == goal) return true;
    for (auto& next : covers_by_length(cur)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

std::vector<RcGraph> rcgraphs_by_subsets(const Permutation& w) {
  const int n = w.size();
  std::vector<CoverLabel> cells;
  for (int k = 1; k < n; ++k) {
    for (int b = 1; k + b <= n; ++b) cells.push_back({k, b});
  }
  const std::vector<int> target(w.entries().begin(), w.entries().end());
  const int len = inversions(target);
  std::vector<RcGraph> out;
  const std::uint64_t total = std::uint64_t{1} << cells.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (__builtin_popcountll(mask) != len) continue;
    std::vector<CoverLabel> chosen;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (mask >> c & 1) chosen.push_back(cells[c]);
    }
    // Reading order: rows top down, right to left within a row.
    auto ordered = chosen;
    std::sort(ordered.begin(), ordered.end(), [](const CoverLabel& x, const CoverLabel& y) {
      return x.k != y.k ? x.k < y.k : x.b > y.b;
    });
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i + 1;
    for (const auto& c : ordered) std::swap(e[c.k + c.b - 2], e[c.k + c.b - 1]);
    if (e == target && inversions(e) == len) out.emplace_back(n, chosen);
  }
  return out;
}

std::set<std::vector<CoverLabel>> increasing_chains_brute(const Permutation& u, const Permutation& w) {
  std::set<std::vector<CoverLabel>> out;
  const std::vector<int> goal(w.entries().begin(), w.entries().end());
  const int goal_len = inversions(goal);
  std::vector<CoverLabel> labels;
  std::function<void(const std::vector<int>&)> walk = [&](const std::vector<int>& cur) {
    const int len = inversions(cur);
    if (len == goal_len) {
      if (cur == goal && std::is_sorted(labels.begin(), labels.end()) &&
          std::adjacent_find(labels.begin(), labels.end()) == labels.end()) {
        out.insert(labels);
      }
      return;
    }
    const int n = static_cast<int>(cur.size());
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        auto next = cur;
        std::swap(next[i - 1], next[j - 1]);
        if (inversions(next) != len + 1) continue;
        for (int k = i; k < j; ++k) {
          labels.push_back({k, cur[i - 1]});
          walk(next);
          labels.pop_back();
        }
      }
    }
  };
  walk(std::vector<int>(u.entries().begin(), u.entries().end()));
  return out;
}

namespace {

Polynomial divided_difference(const Polynomial& f, int i) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    const int p = m[i];
    const int q = m[i + 1];
    if (p == q) continue;
    const int hi = std::max(p, q);
    const int lo = std::min(p, q);
    const Coefficient sign = p > q ? 1 : -1;
    std::vector<int> exps = m.exponents(kMaxVariables);
    // (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
    for (int t = 0; t < hi - lo; ++t) {
      exps[i - 1] = hi - 1 - t;
      exps[i] = lo + t;
      out.add_term(Monomial(exps), sign * c);
    }
  }
  return out;
}

}  // namespace

Polynomial schubert_by_divided_differences(const Permutation& w) {
  const int n = w.size();
  std::vector<int> e(w.entries().begin(), w.entries().end());
  // Climb to w0 by swapping ascents, remembering the steps.
  std::vector<int> steps;
  while (true) {
    int ascent = 0;
    for (int i = 1; i < n; ++i) {
      if (e[i - 1] < e[i]) {
        ascent = i;
        break;
      }
    }
    if (!ascent) break;
    std::swap(e[ascent - 1], e[ascent]);
    steps.push_back(ascent);
  }
  Polynomial p(Monomial::staircase(n));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) p = divided_difference(p, *it);
  return p;
}

std::map<Permutation, std::int64_t> monk(const Permutation& u, int r) {
  std::map<Permutation, std::int64_t> out;
  const std::vector<int> e(u.entries().begin(), u.entries().end());
  const int n = u.size();
  const int base = inversions(e);
  for (int a = 1; a <= r; ++a) {
    for (int b = r + 1; b <= n; ++b) {
      auto next = e;
      std::swap(next[a - 1], next[b - 1]);
      if (inversions(next) == base + 1) ++out[Permutation(next)];
    }
  }
  return out;
}

}  // namespace schubert::oracle
