#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schubert/chains.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

enum class SchubertMethod { kRcGraph, kChain };
enum class SkewMethod { kNormalForm, kChains, kLr };

// An element of H*(Fl_n) written in the Schubert basis.
class SchubertExpansion {
 public:
  using Terms = std::map<Permutation, Coefficient>;

  explicit SchubertExpansion(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const Permutation& w) const;

  // Throws std::invalid_argument if w is not in S_n.
  void add(const Permutation& w, Coefficient c);
  SchubertExpansion& operator+=(const SchubertExpansion& rhs);
  SchubertExpansion scaled(Coefficient c) const;

  bool operator==(const SchubertExpansion&) const = default;

 private:
  int n_ = 0;
  Terms terms_;
};

// The Schubert polynomial of w, computed in S_n (n defaults to w.size()).
// kRcGraph sums x^R over R(w); kChain sums x^delta / x^gamma over the
// increasing chains from w to w0. Results are memoized.
Polynomial schubert(const Permutation& w, int n = -1, SchubertMethod method = SchubertMethod::kRcGraph);

// The skew Schubert polynomial S_{w/u} in S_n:
//   kNormalForm  normal form of S_u * S_{w0 w}
//   kChains      sum of x^delta / x^gamma over increasing chains u -> w
//   kLr          sum over v of c^w_{u,v} S_{w0 v}
// Throws std::invalid_argument unless u <= w.
Polynomial skew(const Permutation& w, const Permutation& u, int n = -1,
                SkewMethod method = SkewMethod::kNormalForm);

// The coefficients c^w_{u,v} indexed by v, read off from the products S_u S_v.
SchubertExpansion skew_lr_coefficients(const Permutation& w, const Permutation& u, int n = -1);

// Unique expansion of p in {S_w : w in S_n}. Repeatedly strips the largest
// monomial x^a with S_{perm_from_code(a)}. Throws std::invalid_argument if p
// has a monomial not dividing x^delta.
SchubertExpansion expand_in_schubert_basis(const Polynomial& p, int n);

// Sum of c * S_w.
Polynomial to_polynomial(const SchubertExpansion& f);

// w -> c^w_{u,v} for w in S_n, from the normal form of S_u * S_v.
SchubertExpansion lr_coefficients(const Permutation& u, const Permutation& v, int n = -1);

// sigma_u * h_a(x_1..x_k): end points of the increasing chains of length a
// from u whose labels all have first coordinate k.
SchubertExpansion pieri(const Permutation& u, int a, int k, int n = -1);

// f * h_alpha by iterated Pieri products.
SchubertExpansion times_h_alpha(const SchubertExpansion& f, const Composition& alpha);

// Coefficient of sigma_{w0} in f * h_alpha.
Coefficient psi_alpha(const SchubertExpansion& f, const Composition& alpha);

// Coefficient of x^delta / x^alpha in the normal form of f.
Coefficient psi_alpha_from_normal_form(const SchubertExpansion& f, const Composition& alpha);

// I_alpha(u, w) == sum_v c^w_{u,v} I_alpha(w0 v, w0).
bool verify_corollary(const Permutation& u, const Permutation& w, const Composition& alpha, int n = -1);

// Skew Schur polynomial s_{outer/inner}(x_1..x_k) by semistandard tableaux.
Polynomial schur_oracle(const std::vector<int>& outer, const std::vector<int>& inner, int k);

// The descent position of a permutation with exactly one descent.
std::optional<int> grassmannian_descent(const Permutation& w);
// lambda_i = w(k+1-i) - (k+1-i) for a Grassmannian w with descent k.
std::vector<int> grassmannian_shape(const Permutation& w);

// All permutations of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schubert
