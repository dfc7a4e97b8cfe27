#pragma once

#include <string>
#include <vector>

#include "nonconsec/perm.hpp"

namespace nonconsec {

/// Strictly increasing integers inside [lo, hi] whose consecutive elements
/// differ by at least min_gap. The empty element set is always legal,
/// including when the interval itself is empty (hi < lo).
class ScatteredSet {
 public:
  ScatteredSet(int lo, int hi, int min_gap, std::vector<int> elements);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int min_gap() const { return min_gap_; }
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  /// "{4,8}"; "{}" when empty.
  std::string str() const;

  /// Every scattered subset of [lo, hi] with the given gap, all sizes, in
  /// lexicographic order of the element lists (empty set first).
  static std::vector<ScatteredSet> enumerate(int lo, int hi, int min_gap);

  friend bool operator==(const ScatteredSet&, const ScatteredSet&) = default;

 private:
  int lo_ = 0;
  int hi_ = 0;
  int min_gap_ = 1;
  std::vector<int> elements_;
};

/// sigma contains no 321 at all (a C_k member); tau starts with a consecutive
/// 321 (a B member). Together they are the image of one A(n,k) permutation
/// under split_321.
struct SplitPair {
  Permutation sigma;
  Permutation tau;
  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

/// The 21 map: swap the identity's entries at positions i, i+1 for each i in
/// s, a gap-2 scattered subset of [1, n-1]. The result avoids a
/// nonconsecutive 21, and every such permutation arises exactly once.
Permutation scattered_to_perm(int n, const ScatteredSet& s);

/// Inverse of scattered_to_perm: the descent positions of p. p must avoid a
/// nonconsecutive 21.
ScatteredSet perm_to_scattered(const Permutation& p);

/// B_n -> D_{n-2} (n >= 3): delete the forced entries 2 and 1 at positions 2
/// and 3, subtract 2 from the remaining entries.
Permutation b_to_d(const Permutation& p);

/// D_{n-2} -> B_n, inverting b_to_d: add 2 to every entry, then insert 2 at
/// position 2 and 1 at position 3.
Permutation d_to_b(const Permutation& q);

/// A(n,k) -> C_k x B_{n-k+1} for first-321 position k >= 2. sigma is the
/// first k-1 entries plus the entry at position k+2, which together must
/// comprise {1..k}; tau is the reduction of positions k..n. The k = 1 class
/// is B_n itself and is outside this map's range.
SplitPair split_321(const Permutation& p);

/// Inverse of split_321: the first k-1 entries of sigma, followed by tau
/// embedded order-isomorphically onto the value set {sigma_k} u {k+1..n}.
Permutation unsplit_321(const Permutation& sigma, const Permutation& tau);

struct Decomposition132 {
  ScatteredSet middles;   // subset of [2, n-1], gap 3
  Permutation remainder;  // 132-avoiding, length n - 2k
  friend bool operator==(const Decomposition132&, const Decomposition132&) = default;
};

/// E(n,k) -> (middle positions of the k disjoint 132s, reduction of p with
/// each 132's first and last entries deleted). p must avoid a nonconsecutive
/// 132.
Decomposition132 decompose_132(const Permutation& p);

/// Inverse of decompose_132. Blanks are placed beside each middle position,
/// q's entries fill the rest, and the blank pairs are resolved left to
/// right: with j the number of placed entries after position i and smaller
/// than the entry there (they must form 1..j), put j+1 before, j+2 after,
/// and raise every other placed entry by 2.
Permutation compose_132(int n, const ScatteredSet& s, const Permutation& q);

/// The partial arrays of compose_132: state [0] is the initial placement,
/// state [t] the array after filling the t-th blank pair. Blanks are 0.
std::vector<std::vector<int>> compose_132_trace(int n, const ScatteredSet& s,
                                                const Permutation& q);

}  // namespace nonconsec
