#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/chains.hpp"

namespace schubert {

using Coefficient = std::int64_t;

// Exact arithmetic on Coefficient; throws std::overflow_error instead of wrapping.
Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

inline constexpr int kMaxVariables = 16;

// x_1^{a_1} ... x_m^{a_m}, m <= kMaxVariables; missing exponents are zero.
//
// The comparison operators implement the one monomial order used throughout
// the library: total degree first, then exponents compared from the
// highest-indexed variable downward. Among monomials of one degree this is the
// lexicographic order with x_1 < x_2 < ... < x_n.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int i);
  // x^delta = x_1^{n-1} x_2^{n-2} ... x_{n-1}.
  static Monomial staircase(int n);

  int operator[](int i) const { return exps_[i - 1]; }  // exponent of x_i
  int degree() const;
  // Largest i with a nonzero exponent; 0 for the constant monomial.
  int num_vars() const;
  std::vector<int> exponents(int n) const;

  // a_i <= n - i for every i, i.e. the monomial divides x^delta.
  bool divides_staircase(int n) const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const;
  // Throws std::invalid_argument unless rhs divides *this.
  Monomial operator/(const Monomial& rhs) const;

  std::strong_ordering operator<=>(const Monomial& rhs) const;
  bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }

  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_;
};

// Sparse polynomial over the integers. No zero coefficients are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  Polynomial() = default;
  Polynomial(Coefficient constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Monomial& m, Coefficient c = 1);

  static Polynomial variable(int i) { return Polynomial(Monomial::variable(i)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  int num_vars() const;
  Coefficient coefficient(const Monomial& m) const;
  // Sum of all coefficients, i.e. the value at x = (1, ..., 1).
  Coefficient coefficient_sum() const;

  // Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, Coefficient c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(Coefficient c) const;
  Polynomial times_monomial(const Monomial& m) const;

  bool operator==(const Polynomial&) const = default;

  // "x1^2*x2 + x1*x2^2", terms in increasing monomial order; "0" when empty.
  std::string to_string() const;
  static Polynomial parse(std::string_view text);

 private:
  Terms terms_;
};

Coefficient coefficient(const Polynomial& p, const Monomial& m);

// e_i(x_1..x_n).
Polynomial elementary(int i, int n);
// h_a(x_1..x_k).
Polynomial complete_h(int a, int k);
// h_{a_1}(x_1) h_{a_2}(x_1, x_2) ... h_{a_{n-1}}(x_1..x_{n-1}). Throws unless
// alpha has at most n - 1 parts and alpha_i <= n - i.
Polynomial h_alpha(const Composition& alpha, int n);

// The unique representative of p modulo <e_1, ..., e_n> supported on
// monomials dividing x^delta. Reduces with h_{n-i+1}(x_1..x_i), whose leading
// monomial is x_i^{n-i+1}. Throws if p involves variables beyond x_n.
Polynomial normal_form(const Polynomial& p, int n);

}  // namespace schubert
