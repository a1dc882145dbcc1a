#include "schubert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace schubert {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient addition");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient product");
  return r;
}

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::span<const int> exponents) {
  exps_.fill(0);
  if (exponents.size() > kMaxVariables) {
    for (std::size_t i = kMaxVariables; i < exponents.size(); ++i) {
      if (exponents[i] != 0) throw std::invalid_argument("too many variables");
    }
  }
  for (std::size_t i = 0; i < exponents.size() && i < kMaxVariables; ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw std::invalid_argument("exponent out of range");
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
  }
}

Monomial Monomial::variable(int i) {
  if (i < 1 || i > kMaxVariables) throw std::invalid_argument("variable index out of range");
  Monomial m;
  m.exps_[i - 1] = 1;
  return m;
}

Monomial Monomial::staircase(int n) {
  if (n < 1 || n > kMaxVariables) throw std::invalid_argument("variable count out of range");
  Monomial m;
  for (int i = 1; i < n; ++i) m.exps_[i - 1] = static_cast<std::uint8_t>(n - i);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

int Monomial::num_vars() const {
  for (int i = kMaxVariables; i >= 1; --i) {
    if (exps_[i - 1]) return i;
  }
  return 0;
}

std::vector<int> Monomial::exponents(int n) const {
  std::vector<int> out(n, 0);
  for (int i = 0; i < n && i < kMaxVariables; ++i) out[i] = exps_[i];
  return out;
}

bool Monomial::divides_staircase(int n) const {
  for (int i = 1; i <= kMaxVariables; ++i) {
    if (exps_[i - 1] > std::max(n - i, 0)) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) {
    const int e = exps_[i] + rhs.exps_[i];
    if (e > 255) throw std::overflow_error("exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  if (!rhs.divides(*this)) throw std::invalid_argument("monomial does not divide");
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) m.exps_[i] = exps_[i] - rhs.exps_[i];
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& rhs) const {
  if (auto c = degree() <=> rhs.degree(); c != 0) return c;
  for (int i = kMaxVariables - 1; i >= 0; --i) {
    if (exps_[i] != rhs.exps_[i]) return exps_[i] <=> rhs.exps_[i];
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (!exps_[i]) continue;
    if (!out.empty()) out.push_back('*');
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

// --- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(Coefficient constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(const Monomial& m, Coefficient c) {
  if (c != 0) terms_.emplace(m, c);
}

int Polynomial::num_vars() const {
  int v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, m.num_vars());
  return v;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

Coefficient Polynomial::coefficient_sum() const {
  Coefficient s = 0;
  for (const auto& [m, c] : terms_) s = checked_add(s, c);
  return s;
}

void Polynomial::add_term(const Monomial& m, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
  }
  return out;
}

Polynomial Polynomial::scaled(Coefficient c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, checked_mul(a, c));
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial out;
  for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out.push_back('-');
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool constant = m.degree() == 0;
    if (constant) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += m.to_string();
    }
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p;
    skip_space();
    if (text_ == "0") return p;
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    while (true) {
      skip_space();
      auto [m, c] = parse_term();
      p.add_term(m, checked_mul(c, sign));
      skip_space();
      if (pos_ == text_.size()) break;
      const char op = text_[pos_++];
      if (op == '+') {
        sign = 1;
      } else if (op == '-') {
        sign = -1;
      } else {
        fail();
      }
    }
    return p;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail() const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "'");
  }

  std::uint64_t parse_uint() {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == text_.data() + pos_) fail();
    pos_ = ptr - text_.data();
    return v;
  }

  std::pair<Monomial, Coefficient> parse_term() {
    std::uint64_t coef = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_uint();
      if (peek() != '*') {
        if (coef > static_cast<std::uint64_t>(INT64_MAX)) fail();
        return {Monomial(), static_cast<Coefficient>(coef)};
      }
      ++pos_;
    }
    std::vector<int> exps(kMaxVariables, 0);
    bool any = false;
    while (peek() == 'x') {
      ++pos_;
      const auto var = parse_uint();
      if (var < 1 || var > kMaxVariables) fail();
      std::uint64_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_uint();
      }
      if (e > 255) fail();
      exps[var - 1] += static_cast<int>(e);
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail();
    if (coef > static_cast<std::uint64_t>(INT64_MAX)) fail();
    return {Monomial(exps), static_cast<Coefficient>(coef)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return TermParser(text).parse(); }

Coefficient coefficient(const Polynomial& p, const Monomial& m) { return p.coefficient(m); }

// --- Symmetric functions ----------------------------------------------------

namespace {

void elementary_rec(int start, int n, int remaining, std::vector<int>& exps, Polynomial& out) {
  if (remaining == 0) {
    out.add_term(Monomial(exps), 1);
    return;
  }
  for (int v = start; v <= n - remaining + 1; ++v) {
    exps[v - 1] = 1;
    elementary_rec(v + 1, n, remaining - 1, exps, out);
    exps[v - 1] = 0;
  }
}

void complete_rec(int var, int k, int remaining, std::vector<int>& exps, Polynomial& out) {
  if (var == k) {
    exps[var - 1] = remaining;
    out.add_term(Monomial(exps), 1);
    exps[var - 1] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    exps[var - 1] = e;
    complete_rec(var + 1, k, remaining - e, exps, out);
  }
  exps[var - 1] = 0;
}

}  // namespace

Polynomial elementary(int i, int n) {
  if (n < 1 || n > kMaxVariables || i < 0 || i > n) throw std::invalid_argument("elementary: need 0 <= i <= n");
  Polynomial out;
  std::vector<int> exps(n, 0);
  elementary_rec(1, n, i, exps, out);
  return out;
}

Polynomial complete_h(int a, int k) {
  if (a < 0 || k < 1 || k > kMaxVariables) throw std::invalid_argument("complete_h: need a >= 0, k >= 1");
  Polynomial out;
  std::vector<int> exps(k, 0);
  complete_rec(1, k, a, exps, out);
  return out;
}

Polynomial h_alpha(const Composition& alpha, int n) {
  if (n < 1 || n > kMaxVariables) throw std::invalid_argument("h_alpha: bad n");
  Polynomial out(1);
  for (std::size_t idx = 0; idx < alpha.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    if (alpha[idx] < 0 || (alpha[idx] > 0 && (i >= n || alpha[idx] > n - i))) {
      throw std::invalid_argument("h_alpha: composition is not below the staircase");
    }
    if (alpha[idx] > 0) out = out * complete_h(alpha[idx], i);
  }
  return out;
}

Polynomial normal_form(const Polynomial& p, int n) {
  if (n < 1 || n > kMaxVariables) throw std::invalid_argument("normal_form: bad n");
  if (p.num_vars() > n) throw std::invalid_argument("normal_form: polynomial uses variables beyond x_n");
  Polynomial current = p;
  // Reducing x_i only touches x_1..x_i, so one sweep from x_n down suffices.
  for (int i = n; i >= 1; --i) {
    const int d = n - i + 1;
    Monomial lead;
    {
      std::vector<int> e(i, 0);
      e[i - 1] = d;
      lead = Monomial(e);
    }
    // x_i^d == -(h_d(x_1..x_i) - x_i^d) modulo the ideal.
    Polynomial tail = complete_h(d, i);
    tail.add_term(lead, -1);
    tail = -tail;
    while (true) {
      Polynomial reducible;
      for (const auto& [m, c] : current.terms()) {
        if (m[i] >= d) reducible.add_term(m, c);
      }
      if (reducible.is_zero()) break;
      current -= reducible;
      for (const auto& [m, c] : reducible.terms()) {
        current += tail.times_monomial(m / lead).scaled(c);
      }
    }
  }
  return current;
}

}  // namespace schubert
