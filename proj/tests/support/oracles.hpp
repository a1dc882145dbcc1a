#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the enumeration, reduction or expansion code they check.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "schubert/chains.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/rcgraph.hpp"

namespace schubert::oracle {

// Double-loop inversion count over raw entries.
int inversions(const std::vector<int>& e);

// Covers as "w = u * t and one more inversion", over all transpositions t.
std::vector<std::vector<int>> covers_by_length(const std::vector<int>& u);

// u <= w by breadth-first search upward through covers_by_length.
bool bruhat_leq_bfs(const Permutation& u, const Permutation& w);

// Every subset of the staircase with l(w) cells whose word multiplies out to
// w with l(w) inversions.
std::vector<RcGraph> rcgraphs_by_subsets(const Permutation& w);

// Every saturated labeled chain u -> w (all covers, all labels), filtered to
// the increasing ones. Label sequences only.
std::set<std::vector<CoverLabel>> increasing_chains_brute(const Permutation& u, const Permutation& w);

// Schubert polynomial by divided differences from x^delta.
Polynomial schubert_by_divided_differences(const Permutation& w);

// Monk: S_{s_r} * S_u = sum of S_{u t_ab}, a <= r < b, one more inversion,
// restricted to S_n.
std::map<Permutation, std::int64_t> monk(const Permutation& u, int r);

}  // namespace schubert::oracle
