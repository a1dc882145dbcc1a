#include "schubert/schubert.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "schubert/rcgraph.hpp"

namespace schubert {

namespace {

// Thread-safe idempotent cache: concurrent misses may compute twice, and the
// first stored value wins.
template <typename Key, typename Value>
class Memo {
 public:
  Value get_or_compute(const Key& key, const std::function<Value()>& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

int resolve_n(const Permutation& w, int n) {
  if (n < 0) return w.size();
  if (n < w.size()) throw std::invalid_argument("n is smaller than the permutation " + w.to_string());
  return n;
}

}  // namespace

// --- SchubertExpansion ------------------------------------------------------

Coefficient SchubertExpansion::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void SchubertExpansion::add(const Permutation& w, Coefficient c) {
  if (w.size() != n_) throw std::invalid_argument("permutation " + w.to_string() + " is not in S_" + std::to_string(n_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

SchubertExpansion& SchubertExpansion::operator+=(const SchubertExpansion& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("expansions live in different S_n");
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

SchubertExpansion SchubertExpansion::scaled(Coefficient c) const {
  SchubertExpansion out(n_);
  for (const auto& [w, a] : terms_) out.add(w, checked_mul(a, c));
  return out;
}

// --- Schubert polynomials ---------------------------------------------------

Polynomial schubert(const Permutation& w, int n, SchubertMethod method) {
  n = resolve_n(w, n);
  if (n > kMaxVariables) throw std::invalid_argument("n exceeds the supported number of variables");
  static Memo<std::tuple<Permutation, int, int>, Polynomial> memo;
  const Permutation we = embed(w, n);
  return memo.get_or_compute({we, n, static_cast<int>(method)}, [&] {
    Polynomial out;
    if (method == SchubertMethod::kRcGraph) {
      RcGraphs graphs(we);
      while (auto graph = graphs.next()) out.add_term(Monomial(graph->monomial()), 1);
    } else {
      const Monomial top = Monomial::staircase(n);
      ChainsToTop chains(we);
      while (auto chain = chains.next()) out.add_term(top / Monomial(chain_monomial(*chain)), 1);
    }
    return out;
  });
}

SchubertExpansion skew_lr_coefficients(const Permutation& w, const Permutation& u, int n) {
  n = std::max(resolve_n(w, n), resolve_n(u, n));
  const Permutation we = embed(w, n);
  const Permutation ue = embed(u, n);
  if (!bruhat_leq(ue, we)) throw std::invalid_argument("u not <= w");
  const int degree = length(we) - length(ue);
  SchubertExpansion out(n);
  for (const auto& v : all_permutations(n)) {
    if (length(v) != degree) continue;
    out.add(v, lr_coefficients(ue, v, n).coefficient(we));
  }
  return out;
}

Polynomial skew(const Permutation& w, const Permutation& u, int n, SkewMethod method) {
  n = std::max(resolve_n(w, n), resolve_n(u, n));
  const Permutation we = embed(w, n);
  const Permutation ue = embed(u, n);
  if (!bruhat_leq(ue, we)) throw std::invalid_argument("u not <= w");
  const Permutation w0 = Permutation::longest(n);
  switch (method) {
    case SkewMethod::kNormalForm:
      return normal_form(schubert(ue, n) * schubert(w0 * we, n), n);
    case SkewMethod::kChains: {
      const Monomial top = Monomial::staircase(n);
      Polynomial out;
      for (const auto& [type, count] : type_counts(ue, we)) out.add_term(top / Monomial(type), count);
      return out;
    }
    case SkewMethod::kLr: {
      Polynomial out;
      const SchubertExpansion coeffs = skew_lr_coefficients(we, ue, n);
      for (const auto& [v, c] : coeffs.terms()) {
        out += schubert(w0 * v, n).scaled(c);
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown skew method");
}

SchubertExpansion expand_in_schubert_basis(const Polynomial& p, int n) {
  for (const auto& [m, c] : p.terms()) {
    if (!m.divides_staircase(n)) {
      throw std::invalid_argument("polynomial is not in the span of Schubert polynomials of S_" + std::to_string(n) +
                                  " (monomial " + m.to_string() + ")");
    }
  }
  SchubertExpansion out(n);
  Polynomial residual = p;
  while (!residual.is_zero()) {
    const auto& [lead, c] = *residual.terms().rbegin();
    const Permutation w = perm_from_code(lead.exponents(n), n);
    const Polynomial sw = schubert(w, n);
    if (sw.terms().rbegin()->first != lead || sw.terms().rbegin()->second != 1) {
      throw std::logic_error("leading monomial of S_" + w.to_string() + " is not x^code");
    }
    const Coefficient coef = c;
    out.add(w, coef);
    residual -= sw.scaled(coef);
  }
  return out;
}

Polynomial to_polynomial(const SchubertExpansion& f) {
  Polynomial out;
  for (const auto& [w, c] : f.terms()) out += schubert(w, f.n()).scaled(c);
  return out;
}

SchubertExpansion lr_coefficients(const Permutation& u, const Permutation& v, int n) {
  n = std::max(resolve_n(u, n), resolve_n(v, n));
  static Memo<std::tuple<Permutation, Permutation, int>, SchubertExpansion> memo;
  const Permutation ue = embed(u, n);
  const Permutation ve = embed(v, n);
  return memo.get_or_compute({ue, ve, n}, [&] {
    return expand_in_schubert_basis(normal_form(schubert(ue, n) * schubert(ve, n), n), n);
  });
}

namespace {

void pieri_rec(std::vector<int>& perm, int k, int last_b, int remaining, SchubertExpansion& out) {
  if (remaining == 0) {
    out.add(Permutation(perm), 1);
    return;
  }
  const int n = static_cast<int>(perm.size());
  for (int i = 1; i <= k; ++i) {
    const int b = perm[i - 1];
    if (b <= last_b) continue;
    for (int j = k + 1; j <= n; ++j) {
      if (!is_cover_swap(perm, i, j)) continue;
      std::swap(perm[i - 1], perm[j - 1]);
      pieri_rec(perm, k, b, remaining - 1, out);
      std::swap(perm[i - 1], perm[j - 1]);
    }
  }
}

}  // namespace

SchubertExpansion pieri(const Permutation& u, int a, int k, int n) {
  n = resolve_n(u, n);
  if (a < 0) throw std::invalid_argument("pieri: degree must be nonnegative");
  if (k < 1 || k >= n) throw std::invalid_argument("pieri: need 1 <= k < n");
  SchubertExpansion out(n);
  std::vector<int> perm(n);
  const Permutation ue = embed(u, n);
  std::copy(ue.entries().begin(), ue.entries().end(), perm.begin());
  pieri_rec(perm, k, 0, a, out);
  return out;
}

SchubertExpansion times_h_alpha(const SchubertExpansion& f, const Composition& alpha) {
  const int n = f.n();
  SchubertExpansion current = f;
  for (std::size_t idx = 0; idx < alpha.size(); ++idx) {
    const int k = static_cast<int>(idx) + 1;
    if (alpha[idx] == 0) continue;
    if (alpha[idx] < 0 || k >= n || alpha[idx] > n - k) {
      throw std::invalid_argument("composition is not below the staircase");
    }
    SchubertExpansion next(n);
    for (const auto& [w, c] : current.terms()) next += pieri(w, alpha[idx], k, n).scaled(c);
    current = std::move(next);
  }
  return current;
}

Coefficient psi_alpha(const SchubertExpansion& f, const Composition& alpha) {
  return times_h_alpha(f, alpha).coefficient(Permutation::longest(f.n()));
}

Coefficient psi_alpha_from_normal_form(const SchubertExpansion& f, const Composition& alpha) {
  const int n = f.n();
  std::vector<int> padded(alpha.begin(), alpha.end());
  padded.resize(std::max<std::size_t>(padded.size(), n), 0);
  const Monomial a(padded);
  const Monomial top = Monomial::staircase(n);
  if (!a.divides(top)) throw std::invalid_argument("composition is not below the staircase");
  return normal_form(to_polynomial(f), n).coefficient(top / a);
}

bool verify_corollary(const Permutation& u, const Permutation& w, const Composition& alpha, int n) {
  n = std::max(resolve_n(w, n), resolve_n(u, n));
  const Permutation ue = embed(u, n);
  const Permutation we = embed(w, n);
  const Permutation w0 = Permutation::longest(n);
  const Coefficient lhs = count_by_type(ue, we, alpha);
  Coefficient rhs = 0;
  const SchubertExpansion coeffs = skew_lr_coefficients(we, ue, n);
  for (const auto& [v, c] : coeffs.terms()) {
    rhs = checked_add(rhs, checked_mul(c, count_by_type(w0 * v, w0, alpha)));
  }
  return lhs == rhs;
}

// --- Schur oracle -----------------------------------------------------------

namespace {

struct TableauFiller {
  std::vector<int> outer;
  std::vector<int> inner;
  int k = 0;
  std::vector<std::vector<int>> grid;  // grid[r][c], 0 where no cell
  std::vector<std::pair<int, int>> cells;
  Polynomial result;

  void fill(std::size_t idx, std::vector<int>& exps) {
    if (idx == cells.size()) {
      result.add_term(Monomial(exps), 1);
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > inner_at(r)) lo = std::max(lo, c > 0 && grid[r][c - 1] ? grid[r][c - 1] : 1);
    if (r > 0 && c >= inner_at(r - 1) && c < outer[r - 1]) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= k; ++v) {
      grid[r][c] = v;
      ++exps[v - 1];
      fill(idx + 1, exps);
      --exps[v - 1];
    }
    grid[r][c] = 0;
  }

  int inner_at(std::size_t r) const { return r < inner.size() ? inner[r] : 0; }
};

}  // namespace

Polynomial schur_oracle(const std::vector<int>& outer, const std::vector<int>& inner, int k) {
  if (k < 1 || k > kMaxVariables) throw std::invalid_argument("schur_oracle: bad variable count");
  if (inner.size() > outer.size()) throw std::invalid_argument("inner shape does not fit in outer shape");
  for (std::size_t r = 0; r < outer.size(); ++r) {
    if (r > 0 && outer[r] > outer[r - 1]) throw std::invalid_argument("outer shape is not a partition");
    if (r < inner.size() && (inner[r] > outer[r] || (r > 0 && inner[r] > inner[r - 1]))) {
      throw std::invalid_argument("inner shape is not a partition inside the outer shape");
    }
  }
  TableauFiller filler{outer, inner, k, {}, {}, {}};
  filler.grid.assign(outer.size(), std::vector<int>(outer.empty() ? 0 : outer[0], 0));
  for (std::size_t r = 0; r < outer.size(); ++r) {
    for (int c = filler.inner_at(r); c < outer[r]; ++c) filler.cells.emplace_back(static_cast<int>(r), c);
  }
  std::vector<int> exps(k, 0);
  filler.fill(0, exps);
  return filler.result;
}

std::optional<int> grassmannian_descent(const Permutation& w) {
  std::optional<int> descent;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {
      if (descent) return std::nullopt;
      descent = i;
    }
  }
  return descent;
}

std::vector<int> grassmannian_shape(const Permutation& w) {
  const auto k = grassmannian_descent(w);
  if (!k) throw std::invalid_argument(w.to_string() + " is not Grassmannian");
  std::vector<int> shape;
  for (int i = 1; i <= *k; ++i) {
    const int part = w(*k + 1 - i) - (*k + 1 - i);
    if (part > 0) shape.push_back(part);
  }
  return shape;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace schubert
