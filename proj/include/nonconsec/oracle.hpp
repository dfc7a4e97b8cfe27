#pragma once

#include <string>
#include <vector>

#include "nonconsec/counting.hpp"
#include "nonconsec/perm.hpp"

namespace nonconsec {

/// Largest n the exhaustive oracle sweeps without an explicit override
/// (10! = 3,628,800 permutations, seconds at desk scale).
inline constexpr int kDefaultOracleCeiling = 10;

enum class ClassKind { A, B, C, D, A_nk, E, E_nk };

/// One of the permutation classes of the 321 and 132 analyses:
///   A(n)   - avoid a nonconsecutive 321
///   B(n)   - members of A(n) that start with a 321 in positions 1..3
///   C(n)   - contain no 321 at all (the Catalan class)
///   D(n)   - members of A(n) not in B(n)
///   A(n,k) - members of A(n) whose first (necessarily consecutive) 321
///            starts at position k; 1 <= k <= n-2
///   E(n)   - avoid a nonconsecutive 132
///   E(n,k) - members of E(n) with exactly k (necessarily consecutive) 132s;
///            0 <= k <= floor(n/3)
struct ClassLabel {
  ClassKind kind = ClassKind::A;
  int n = 0;
  int k = 0;  // meaningful for A_nk and E_nk only

  /// Parses "A(5)", "B(3)", "A(5,2)", "E(10,2)", ... Throws invalid_input on
  /// malformed text.
  static ClassLabel parse(const std::string& text);

  std::string str() const;

  /// Throws invalid_input when n or k lies outside the class's legal range.
  void validate() const;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Membership from first principles (occurrence scanning), never from
/// counting formulas.
bool class_contains(const ClassLabel& label, const Permutation& p);

/// All of S_n in lexicographic order. Guarded by the ceiling.
std::vector<Permutation> enumerate_sn(int n, int ceiling = kDefaultOracleCeiling);

/// Members of the class in lexicographic order of one-line notation.
std::vector<Permutation> enumerate_class(const ClassLabel& label,
                                         int ceiling = kDefaultOracleCeiling);

/// |class|, streamed without materializing the members.
BigCount count_class(const ClassLabel& label, int ceiling = kDefaultOracleCeiling);

/// Number of permutations of [n] whose every instance of pat is consecutive.
BigCount count_avoiders_bruteforce(int n, const Pattern& pat,
                                   int ceiling = kDefaultOracleCeiling);

/// All 321-side class sizes for one n, tallied in a single sweep of S_n.
/// a_k[k] holds |A(n,k)| for 1 <= k <= n-2; index 0 is unused.
struct Classes321 {
  BigCount a, b, c, d;
  std::vector<BigCount> a_k;
};
Classes321 sweep_321_classes(int n, int ceiling = kDefaultOracleCeiling);

/// All 132-side class sizes for one n; e_k[k] holds |E(n,k)|, 0 <= k <= n/3.
struct Classes132 {
  BigCount e;
  std::vector<BigCount> e_k;
};
Classes132 sweep_132_classes(int n, int ceiling = kDefaultOracleCeiling);

}  // namespace nonconsec
