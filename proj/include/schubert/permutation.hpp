#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

// A permutation of {1, ..., n} in one-line notation. Positions and values are
// 1-indexed everywhere in the public interface.
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `entries` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  static Permutation longest(int n);

  // Accepts "2413" (single digits, n <= 9) and "2,4,1,3".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int position) const { return entries_[position - 1]; }
  std::span<const int> entries() const { return entries_; }

  // Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  Permutation inverse() const;
  // (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& rhs) const;
  // Right multiplication by the transposition (i, j): swaps two positions.
  Permutation swap_positions(int i, int j) const;

  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

Permutation identity(int n);
Permutation longest(int n);

// Number of inversions.
int length(const Permutation& w);

// Lehmer code: c_i = #{j > i : w(j) < w(i)}.
std::vector<int> code(const Permutation& w);

// Inverse of `code`. `n` defaults to the number of parts; parts beyond those
// given are zero. Throws std::invalid_argument if some c_i > n - i.
Permutation perm_from_code(std::span<const int> c, int n = -1);

// Appends the fixed points n+1..m. Throws if m < n.
Permutation embed(const Permutation& w, int m);

// Positions (i, j), i < j, swapped by a Bruhat cover u -> u * (i, j).
struct Cover {
  Permutation target;
  int i = 0;
  int j = 0;

  bool operator==(const Cover&) const = default;
};

// Edge label (k, b) of the labeled Bruhat order. Ordered lexicographically.
// The same pair type doubles as a staircase cell of an rc-graph.
struct CoverLabel {
  int k = 0;
  int b = 0;

  auto operator<=>(const CoverLabel&) const = default;
};

// True iff u * (i, j) covers u: u(i) < u(j) and no position strictly between
// carries a value strictly between u(i) and u(j).
bool is_cover_swap(std::span<const int> u, int i, int j);

// All covers of u, ordered by (i, j).
std::vector<Cover> bruhat_covers(const Permutation& u);

// Labels (k, u(i)) for i <= k < j where u^{-1} w = (i, j).
// Throws std::invalid_argument if w does not cover u.
std::vector<CoverLabel> labeled_edges(const Permutation& u, const Permutation& w);

// Bruhat comparison via the Ehresmann criterion. Throws on size mismatch.
bool bruhat_leq(const Permutation& u, const Permutation& w);

}  // namespace schubert
