#include "schubert/polynomial.hpp"

#include <limits>
#include <random>

#include "gtest/gtest.h"

namespace schubert {
namespace {

Polynomial X(int i) { return Polynomial::variable(i); }
Monomial M(std::vector<int> e) { return Monomial(e); }
Polynomial parse(const char* s) { return Polynomial::parse(s); }

Polynomial random_polynomial(std::mt19937_64& rng, int n, int terms, int max_exp) {
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(n);
    for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
    p.add_term(Monomial(e), static_cast<Coefficient>(rng() % 7) - 3);
  }
  return p;
}

TEST(Monomial, Basics) {
  EXPECT_EQ(Monomial::staircase(4), M({3, 2, 1}));
  EXPECT_EQ(Monomial::staircase(1), Monomial());
  EXPECT_EQ(M({1, 2, 0}).degree(), 3);
  EXPECT_EQ(M({1, 2, 0}).num_vars(), 2);
  EXPECT_EQ(M({2, 0, 1}).to_string(), "x1^2*x3");
  EXPECT_EQ(Monomial().to_string(), "1");
  EXPECT_TRUE(M({2, 1}).divides_staircase(4));
  EXPECT_FALSE(M({0, 3}).divides_staircase(4));
  EXPECT_EQ(Monomial::staircase(4) / M({1, 2, 0}), M({2, 0, 1}));
  EXPECT_THROW(M({1}) / M({2}), std::invalid_argument);
  EXPECT_THROW(M(std::vector<int>(17, 1)), std::invalid_argument);
}

TEST(Monomial, Order) {
  // Degree first.
  EXPECT_LT(M({0, 0, 1}), M({2}));
  // Within a degree, compared from the highest-indexed variable down.
  EXPECT_LT(M({2, 0}), M({1, 1}));
  EXPECT_LT(M({1, 1, 0}), M({1, 0, 1}));
  EXPECT_LT(M({0, 2, 0}), M({1, 0, 1}));
}

TEST(Polynomial, Arithmetic) {
  const Polynomial p = X(1) + X(2);
  EXPECT_EQ((p * p).to_string(), "x1^2 + 2*x1*x2 + x2^2");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p * Polynomial(0)).to_string(), "0");
  EXPECT_EQ((X(1) - X(2) * 3).to_string(), "x1 - 3*x2");
  EXPECT_EQ((-p).to_string(), "-x1 - x2");
  EXPECT_EQ(p.times_monomial(M({0, 0, 2})).to_string(), "x1*x3^2 + x2*x3^2");
  EXPECT_EQ((p * p).coefficient_sum(), 4);
  EXPECT_EQ(coefficient(p * p, M({1, 1})), 2);
  EXPECT_EQ((p * p).num_vars(), 2);
}

TEST(Polynomial, OverflowIsDetected) {
  const Coefficient big = std::numeric_limits<Coefficient>::max() / 2 + 1;
  EXPECT_THROW(checked_add(big, big), std::overflow_error);
  EXPECT_THROW(checked_mul(big, 2), std::overflow_error);
  EXPECT_EQ(checked_add(big, big - 2), std::numeric_limits<Coefficient>::max() - 1);
  const Polynomial p(Monomial(), big);
  EXPECT_THROW(p + p, std::overflow_error);
  EXPECT_THROW(p.scaled(3), std::overflow_error);
}

TEST(Polynomial, TextRoundTrip) {
  for (const char* s : {"0", "1", "x1", "x1^2*x2 + x1*x2^2", "-x1 + 3*x2*x3 - 7", "2*x1^3*x2^2*x3"}) {
    EXPECT_EQ(parse(s), parse(parse(s).to_string().c_str())) << s;
  }
  EXPECT_EQ(parse("x2 + x1").to_string(), "x1 + x2");
  EXPECT_EQ(parse("x1*x1"), X(1) * X(1));
  EXPECT_THROW(parse("x"), std::invalid_argument);
  EXPECT_THROW(parse("x1 +"), std::invalid_argument);
  EXPECT_THROW(parse("x17"), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto p = random_polynomial(rng, 4, 6, 3);
    EXPECT_EQ(parse(p.to_string().c_str()), p);
  }
}

TEST(SymmetricFunctions, ElementaryAndComplete) {
  EXPECT_EQ(elementary(2, 3), parse("x1*x2 + x1*x3 + x2*x3"));
  EXPECT_EQ(elementary(0, 3), Polynomial(1));
  EXPECT_EQ(complete_h(2, 2), parse("x1^2 + x1*x2 + x2^2"));
  EXPECT_EQ(complete_h(0, 4), Polynomial(1));
  EXPECT_EQ(complete_h(3, 1), parse("x1^3"));
  EXPECT_EQ(h_alpha({1, 2, 0}, 4), complete_h(1, 1) * complete_h(2, 2));
  EXPECT_EQ(h_alpha({}, 4), Polynomial(1));
  EXPECT_THROW(h_alpha({4}, 4), std::invalid_argument);
  EXPECT_THROW(h_alpha({0, 0, 0, 1}, 4), std::invalid_argument);
}

TEST(SymmetricFunctions, CompleteCountsMatchBinomials) {
  // h_a(x_1..x_k) has C(a + k - 1, k - 1) monomials, each with coefficient 1.
  auto binom = [](int n, int k) {
    Coefficient r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int k = 1; k <= 5; ++k) {
    for (int a = 0; a <= 5; ++a) {
      EXPECT_EQ(complete_h(a, k).coefficient_sum(), binom(a + k - 1, k - 1));
    }
  }
}

TEST(NormalForm, SmallExamples) {
  EXPECT_EQ(normal_form(X(2), 2), -X(1));
  EXPECT_EQ(normal_form(X(1) * X(1), 2), Polynomial());
  EXPECT_EQ(normal_form(X(1), 2), X(1));
  EXPECT_EQ(normal_form(Polynomial(5), 3), Polynomial(5));
  EXPECT_EQ(normal_form(X(3), 3), -X(1) - X(2));
  EXPECT_EQ(normal_form(Polynomial(Monomial::staircase(4)), 4), Polynomial(Monomial::staircase(4)));
  EXPECT_THROW(normal_form(X(4), 3), std::invalid_argument);
}

TEST(NormalForm, IdealGeneratorsVanish) {
  for (int n = 1; n <= 7; ++n) {
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(normal_form(elementary(i, n), n).is_zero()) << n << " " << i;
    // Symmetric polynomials of positive degree lie in the ideal too.
    EXPECT_TRUE(normal_form(complete_h(2, n), n).is_zero()) << n;
  }
}

TEST(NormalForm, SupportIdempotenceAndHomomorphism) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto f = random_polynomial(rng, n, 4, n);
      const auto g = random_polynomial(rng, n, 3, n - 1);
      const auto nf = normal_form(f, n);
      for (const auto& [m, c] : nf.terms()) EXPECT_TRUE(m.divides_staircase(n)) << m.to_string();
      EXPECT_EQ(normal_form(nf, n), nf);
      EXPECT_EQ(normal_form(f + g, n), nf + normal_form(g, n));
      EXPECT_EQ(normal_form(f * g, n), normal_form(nf * normal_form(g, n), n));
      // Adding an ideal element does not change the normal form.
      EXPECT_EQ(normal_form(f + g * elementary(1 + static_cast<int>(rng() % n), n), n), nf);
    }
  }
}

TEST(NormalForm, TopDegreeIsOneDimensional) {
  // Every monomial of degree C(n,2) reduces to a multiple of x^delta.
  for (int n = 2; n <= 5; ++n) {
    const int top = n * (n - 1) / 2;
    const auto nf = normal_form(Polynomial(M({top})), n);
    for (const auto& [m, c] : nf.terms()) EXPECT_EQ(m, Monomial::staircase(n));
  }
}

}  // namespace
}  // namespace schubert
