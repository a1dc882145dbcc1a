#include "schubert/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace schubert {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return Permutation(std::move(e));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> e;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw std::invalid_argument("bad permutation string '" + std::string(text) + "'");
      }
      e.push_back(ch - '0');
    }
  } else {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view field = text.substr(pos, comma - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::invalid_argument("bad permutation string '" + std::string(text) + "'");
      }
      e.push_back(value);
      pos = comma + 1;
    }
  }
  if (e.empty()) throw std::invalid_argument("empty permutation string");
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (compact) {
      out.push_back(static_cast<char>('0' + entries_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(entries_[i]);
    }
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 0; i < size(); ++i) inv[entries_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> e(entries_.size());
  for (int i = 0; i < size(); ++i) e[i] = entries_[rhs.entries_[i] - 1];
  return Permutation(std::move(e));
}

Permutation Permutation::swap_positions(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size()) {
    throw std::out_of_range("transposition position out of range");
  }
  Permutation out = *this;
  std::swap(out.entries_[i - 1], out.entries_[j - 1]);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] != i + 1) return false;
  }
  return true;
}

Permutation identity(int n) { return Permutation::identity(n); }
Permutation longest(int n) { return Permutation::longest(n); }

int length(const Permutation& w) {
  int inversions = 0;
  auto e = w.entries();
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] > e[j]) ++inversions;
    }
  }
  return inversions;
}

std::vector<int> code(const Permutation& w) {
  auto e = w.entries();
  std::vector<int> c(e.size(), 0);
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size(); ++j) {
      if (e[j] < e[i]) ++c[i];
    }
  }
  return c;
}

Permutation perm_from_code(std::span<const int> c, int n) {
  if (n < 0) n = static_cast<int>(c.size());
  if (static_cast<int>(c.size()) > n) {
    // Trailing zeros beyond n are harmless; anything else is not.
    for (size_t i = n; i < c.size(); ++i) {
      if (c[i] != 0) throw std::invalid_argument("code has more nonzero parts than n");
    }
  }
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> available(n);
  for (int i = 0; i < n; ++i) available[i] = i + 1;
  std::vector<int> e;
  e.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int ci = i < static_cast<int>(c.size()) ? c[i] : 0;
    if (ci < 0 || ci >= static_cast<int>(available.size())) {
      throw std::invalid_argument("code entry c_" + std::to_string(i + 1) + " = " +
                                  std::to_string(ci) + " exceeds n - i");
    }
    e.push_back(available[ci]);
    available.erase(available.begin() + ci);
  }
  return Permutation(std::move(e));
}

Permutation embed(const Permutation& w, int m) {
  if (m < w.size()) throw std::invalid_argument("embed target smaller than permutation");
  std::vector<int> e(w.entries().begin(), w.entries().end());
  for (int v = w.size() + 1; v <= m; ++v) e.push_back(v);
  return Permutation(std::move(e));
}

bool is_cover_swap(std::span<const int> u, int i, int j) {
  if (i >= j) return false;
  const int lo = u[i - 1];
  const int hi = u[j - 1];
  if (lo > hi) return false;
  for (int m = i + 1; m < j; ++m) {
    const int v = u[m - 1];
    if (lo < v && v < hi) return false;
  }
  return true;
}

std::vector<Cover> bruhat_covers(const Permutation& u) {
  std::vector<Cover> out;
  const int n = u.size();
  auto e = u.entries();
  for (int i = 1; i <= n; ++i) {
    // Scanning right, a swap partner must be below every earlier partner.
    int ceiling = n + 1;
    for (int j = i + 1; j <= n; ++j) {
      const int v = e[j - 1];
      if (v > e[i - 1] && v < ceiling) {
        out.push_back({u.swap_positions(i, j), i, j});
        ceiling = v;
      }
    }
  }
  return out;
}

std::vector<CoverLabel> labeled_edges(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> diff;
  for (int p = 1; p <= u.size(); ++p) {
    if (u(p) != w(p)) diff.push_back(p);
  }
  if (diff.size() != 2 || u(diff[0]) != w(diff[1]) || u(diff[1]) != w(diff[0]) ||
      !is_cover_swap(u.entries(), diff[0], diff[1])) {
    throw std::invalid_argument(w.to_string() + " does not cover " + u.to_string());
  }
  const int i = diff[0];
  const int j = diff[1];
  std::vector<CoverLabel> labels;
  for (int k = i; k < j; ++k) labels.push_back({k, u(i)});
  return labels;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("permutation size mismatch");
  const int n = u.size();
  // Ehresmann: the sorted prefix u(1..k) is dominated entrywise by that of w.
  std::vector<int> pu, pw;
  pu.reserve(n);
  pw.reserve(n);
  for (int k = 1; k <= n; ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
    for (int m = 0; m < k; ++m) {
      if (pu[m] > pw[m]) return false;
    }
  }
  return true;
}

}  // namespace schubert
