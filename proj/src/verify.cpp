#include "schubert/verify.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "schubert/chains.hpp"
#include "schubert/rcgraph.hpp"
#include "schubert/schubert.hpp"

namespace schubert::verify {

void SuiteReport::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok && failures.size() < 20) failures.push_back(what);
  else if (!ok && failures.size() == 20) failures.push_back("...");
}

namespace {

using LabelSeq = std::vector<CoverLabel>;

LabelSeq labels_of(const LabeledChain& chain) { return {chain.labels().begin(), chain.labels().end()}; }

std::vector<std::pair<Permutation, Permutation>> comparable_pairs(int n) {
  std::vector<std::pair<Permutation, Permutation>> pairs;
  const auto perms = all_permutations(n);
  for (const auto& w : perms) {
    for (const auto& u : perms) {
      if (bruhat_leq(u, w)) pairs.emplace_back(u, w);
    }
  }
  return pairs;
}

// Compositions with `parts` parts summing to `weight`.
void compositions(int parts, int weight, Composition& current, std::vector<Composition>& out) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(weight);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int a = 0; a <= weight; ++a) {
    current.push_back(a);
    compositions(parts, weight - a, current, out);
    current.pop_back();
  }
}

SuiteReport bijection_suite(int n) {
  SuiteReport report;
  report.name = "bijection";
  const Permutation w0 = Permutation::longest(n);
  const Monomial delta = Monomial::staircase(n);
  for (const auto& w : all_permutations(n)) {
    const std::string tag = " [w=" + w.to_string() + "]";
    std::set<LabelSeq> from_graphs;
    std::int64_t graphs = 0;
    RcGraphs stream(w);
    while (auto graph = stream.next()) {
      ++graphs;
      report.check(graph->is_valid() && graph->perm() == w, "enumerated rc-graph not in R(w)" + tag);
      const LabeledChain chain = chain_of_rcgraph(*graph);
      report.check(rcgraph_of_chain(chain) == *graph, "rcgraph_of_chain(chain_of_rcgraph(R)) != R" + tag);
      report.check(Monomial(graph->monomial()) * Monomial(chain_monomial(chain)) == delta,
                   "x^R x^gamma(R) != x^delta" + tag);
      from_graphs.insert(labels_of(chain));
    }
    std::set<LabelSeq> top_chains;
    ChainsToTop chains(w);
    while (auto chain = chains.next()) {
      report.check(chain_of_rcgraph(rcgraph_of_chain(*chain)) == *chain,
                   "chain_of_rcgraph(rcgraph_of_chain(gamma)) != gamma" + tag);
      top_chains.insert(labels_of(*chain));
    }
    report.check(static_cast<std::int64_t>(top_chains.size()) == graphs && from_graphs == top_chains,
                 "|R(w)| != |Gamma(w, w0)|" + tag);
    if (n <= 5) {
      std::set<LabelSeq> generic;
      IncreasingChains all(w, w0);
      while (auto chain = all.next()) generic.insert(labels_of(*chain));
      report.check(generic == top_chains, "specialized tree differs from generic enumeration" + tag);
    }
  }
  return report;
}

SuiteReport routes_suite(int n, std::uint64_t seed) {
  SuiteReport report;
  report.name = "routes";
  std::vector<std::pair<Permutation, Permutation>> pairs;
  if (n <= 4) {
    pairs = comparable_pairs(n);
  } else {
    std::mt19937_64 rng(seed);
    const auto perms = all_permutations(n);
    while (pairs.size() < 100) {
      const auto& w = perms[rng() % perms.size()];
      const auto& u = perms[rng() % perms.size()];
      if (bruhat_leq(u, w)) pairs.emplace_back(u, w);
    }
  }
  for (const auto& [u, w] : pairs) {
    const std::string tag = " [u=" + u.to_string() + ", w=" + w.to_string() + "]";
    const Polynomial by_nf = skew(w, u, n, SkewMethod::kNormalForm);
    const Polynomial by_chains = skew(w, u, n, SkewMethod::kChains);
    const Polynomial by_lr = skew(w, u, n, SkewMethod::kLr);
    report.check(by_nf == by_chains, "normal form route != chain route" + tag);
    report.check(by_nf == by_lr, "normal form route != LR route" + tag);
    const SchubertExpansion coeffs = skew_lr_coefficients(w, u, n);
    for (const auto& [v, c] : coeffs.terms()) {
      report.check(c > 0, "negative structure constant" + tag);
    }
  }
  return report;
}

SuiteReport corollary_suite(int n) {
  SuiteReport report;
  report.name = "corollary";
  const Permutation w0 = Permutation::longest(n);
  std::map<Permutation, std::map<Composition, std::int64_t>> top_counts;
  auto counts_to_top = [&](const Permutation& start) -> const std::map<Composition, std::int64_t>& {
    auto it = top_counts.find(start);
    if (it == top_counts.end()) it = top_counts.emplace(start, type_counts(start, w0)).first;
    return it->second;
  };
  auto lookup = [](const std::map<Composition, std::int64_t>& m, const Composition& a) -> std::int64_t {
    auto it = m.find(a);
    return it == m.end() ? 0 : it->second;
  };
  for (const auto& [u, w] : comparable_pairs(n)) {
    const std::string tag = " [u=" + u.to_string() + ", w=" + w.to_string() + "]";
    const auto lhs_counts = type_counts(u, w);
    const auto coeffs = skew_lr_coefficients(w, u, n);
    std::vector<Composition> alphas;
    Composition scratch;
    compositions(n - 1, length(w) - length(u), scratch, alphas);
    for (const auto& alpha : alphas) {
      std::int64_t rhs = 0;
      for (const auto& [v, c] : coeffs.terms()) rhs += c * lookup(counts_to_top(w0 * v), alpha);
      report.check(lookup(lhs_counts, alpha) == rhs, "corollary identity fails" + tag);
    }
  }
  return report;
}

SuiteReport pieri_suite(int n) {
  SuiteReport report;
  report.name = "pieri";
  const auto perms = all_permutations(n);
  for (const auto& u : perms) {
    const Polynomial su = schubert(u, n);
    for (int k = 1; k < n; ++k) {
      for (int a = 0; a < n; ++a) {
        const auto by_chains = pieri(u, a, k, n);
        const auto by_poly = expand_in_schubert_basis(normal_form(su * complete_h(a, k), n), n);
        report.check(by_chains == by_poly, "Pieri rule mismatch [u=" + u.to_string() + ", a=" + std::to_string(a) +
                                               ", k=" + std::to_string(k) + "]");
      }
    }
  }
  // psi_alpha on every alpha below the staircase.
  std::vector<Composition> alphas{{}};
  for (int i = 1; i < n; ++i) {
    std::vector<Composition> grown;
    for (const auto& a : alphas) {
      for (int p = 0; p <= n - i; ++p) {
        grown.push_back(a);
        grown.back().push_back(p);
      }
    }
    alphas = std::move(grown);
  }
  for (const auto& u : perms) {
    SchubertExpansion f(n);
    f.add(u, 1);
    for (const auto& alpha : alphas) {
      report.check(psi_alpha(f, alpha) == psi_alpha_from_normal_form(f, alpha),
                   "psi_alpha routes disagree [u=" + u.to_string() + "]");
    }
  }
  return report;
}

SuiteReport stability_suite(int n) {
  SuiteReport report;
  report.name = "stability";
  for (const auto& [u, w] : comparable_pairs(n)) {
    const Polynomial base = skew(w, u, n);
    Polynomial shifted = base;
    for (int m = n + 1; m <= n + 2; ++m) {
      // x^{delta_m} / x^{delta_{m-1}} = x_1 x_2 ... x_{m-1}
      std::vector<int> ones(m - 1, 1);
      shifted = shifted.times_monomial(Monomial(ones));
      report.check(skew(embed(w, m), embed(u, m), m) == shifted,
                   "x^-delta S_{w/u} changes from S_" + std::to_string(n) + " to S_" + std::to_string(m) +
                       " [u=" + u.to_string() + ", w=" + w.to_string() + "]");
    }
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bijection", "routes", "corollary", "pieri", "stability"};
  return names;
}

SuiteReport run_suite(std::string_view name, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("suite size must be >= 1");
  if (name == "bijection") return bijection_suite(n);
  if (name == "routes") return routes_suite(n, seed);
  if (name == "corollary") return corollary_suite(n);
  if (name == "pieri") return pieri_suite(n);
  if (name == "stability") return stability_suite(n);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_suites(std::string_view name, int n, std::uint64_t seed) {
  std::vector<SuiteReport> reports;
  if (name == "all") {
    for (const auto& s : suite_names()) reports.push_back(run_suite(s, n, seed));
  } else {
    reports.push_back(run_suite(name, n, seed));
  }
  return reports;
}

}  // namespace schubert::verify
