#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqc {

/// A bijection of {1..n} stored in one-line notation: images()[i-1] == p(i).
///
/// Composition convention, used everywhere in the library:
///   (p * q)(i) = p(q(i))      -- q is applied first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  /// Throws DomainError unless `images` is a permutation of 1..n.
  static Permutation from_images(std::vector<int> images);
  /// Product of the given disjoint or overlapping cycles, leftmost applied
  /// last. Points are 1-based.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int n, int i, int j);
  /// s_k = (k, k+1).
  static Permutation adjacent(int n, int k) { return transposition(n, k, k + 1); }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// (p * q)(i) = p(q(i)). Throws SizeMismatch if p.size() != q.size().
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Disjoint cycles of the moved points; each cycle starts at its minimum and
/// cycles are sorted by first element. Fixed points are omitted.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

std::vector<int> support(const Permutation& p);
int locality(const Permutation& p);
/// max(support) - min(support) + 1, or 0 for the identity: the length of the
/// line segment a SWAP network for p has to touch.
int span_locality(const Permutation& p);
/// Number of inversions; equals the minimal number of adjacent SWAPs.
int inversion_count(const Permutation& p);

/// Transpositions (i, j) with i < j whose product, composed right-to-left,
/// equals p. A cycle (a1 ... am) contributes (a1 a2)(a2 a3)...(a_{m-1} a_m).
std::vector<std::pair<int, int>> transposition_decomposition(const Permutation& p);

/// Word k_1..k_m with p = s_{k_1} * ... * s_{k_m}, obtained by bubble sort of
/// the one-line form. Length equals inversion_count(p).
std::vector<int> adjacent_word(const Permutation& p);

Permutation product_of_transpositions(int n, std::span<const std::pair<int, int>> ts);
Permutation product_of_adjacent(int n, std::span<const int> word);

/// Number of permutations of S_n moving exactly l points: C(n,l) * !l.
/// D_0 = 1 and D_1 = 0. Throws DomainError when l > n or l < 0, and
/// ResourceError when the count does not fit in 64 bits.
std::uint64_t derangement_count(int n, int l);
/// Sum of D_l for l = 2..k; 0 when k < 2.
std::uint64_t count_k_local(int n, int k);
std::uint64_t factorial(int n);

/// All non-identity permutations of S_n moving at most k points, ordered by
/// locality then by one-line form.
std::vector<Permutation> enumerate_k_local(int n, int k);
/// All of S_n in coset order (see coset_rank).
std::vector<Permutation> enumerate_all(int n);

/// Rank of p in the coset ordering used by dense functions on S_n:
///   rank(p) = (p(n) - 1) * (n-1)! + rank(c_j^{-1} * p restricted to S_{n-1}),
/// where j = p(n) and c_j = s_j s_{j+1} ... s_{n-1} is the cycle sending
/// n -> j. Consecutive blocks of (n-1)! ranks are the left cosets c_j S_{n-1}.
std::size_t coset_rank(const Permutation& p);
Permutation coset_unrank(int n, std::size_t rank);
/// The coset representative c_j = s_j * s_{j+1} * ... * s_{n-1}.
Permutation coset_representative(int n, int j);

/// "(1 2 3)(5 6)" or "()" for the identity.
std::string to_cycle_string(const Permutation& p);
/// "[2,3,1,4]".
std::string to_one_line_string(const Permutation& p);
/// Accepts cycle notation or one-line notation. For cycle notation `n` gives
/// the degree; pass 0 to use the largest point mentioned. For one-line
/// notation `n` must be 0 or match the length.
Permutation parse_permutation(std::string_view text, int n = 0);

}  // namespace pqc
