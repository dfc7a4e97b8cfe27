#pragma once

#include <string>
#include <vector>

#include "nonconsec/errors.hpp"

namespace nonconsec {

/// A permutation of [n] in one-line notation: entries() lists the values
/// p(1), p(2), ..., p(n). Positions and values are both 1-based. n = 0 is the
/// empty permutation. Construction validates that each of 1..n appears
/// exactly once.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Parses comma-separated one-line notation, e.g. "10,9,5,7,6,8,2,4,3,1".
  /// Whitespace around entries is ignored; the empty string is the empty
  /// permutation.
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }

  /// Value at 1-based position pos.
  int at(int pos) const { return entries_[static_cast<size_t>(pos) - 1]; }

  const std::vector<int>& entries() const { return entries_; }

  /// Comma-separated one-line notation; "" for n = 0.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// A forbidden/controlled shape: a permutation of length 2 or 3. The three
/// representative patterns are Pattern::parse("21"), "321" and "132".
class Pattern {
 public:
  explicit Pattern(Permutation p);

  /// Parses a digit string such as "21", "321" or "132".
  static Pattern parse(const std::string& digits);

  const Permutation& perm() const { return perm_; }
  int length() const { return perm_.size(); }

  /// Digit string form, e.g. "132".
  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Permutation perm_;
};

/// Positions of one pattern instance inside a host permutation; strictly
/// increasing, 1-based.
struct Occurrence {
  std::vector<int> positions;

  /// True when the instance occupies contiguous positions.
  bool consecutive() const;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Order-isomorphic relabeling of a word of distinct integers: the smallest
/// entry becomes 1, the next smallest 2, and so on.
Permutation reduce(const std::vector<int>& word);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Pattern reverse(const Pattern& pat);
Pattern complement(const Pattern& pat);

/// Canonical representative of pat under the reverse/complement symmetries.
/// Patterns fixed by reverse-then-complement (12, 21, 123, 321) are already
/// canonical; every other pattern maps to the lexicographically smallest
/// member of its orbit, so 132, 213, 231 and 312 all canonicalize to 132.
Pattern canonical_pattern(const Pattern& pat);

/// All instances of pat in p, as position tuples in lexicographic order.
std::vector<Occurrence> occurrences(const Permutation& p, const Pattern& pat);

/// True when p contains at least one instance of pat, consecutive or not.
bool contains(const Permutation& p, const Pattern& pat);

/// One-pass summary of the instances of pat in p. The scan stops as soon as
/// a nonconsecutive instance is found; in that case the other fields are
/// unspecified.
struct OccurrenceScan {
  bool any_nonconsecutive = false;
  int consecutive_count = 0;
  int first_consecutive_start = 0;  // 0 when there is no instance
};
OccurrenceScan scan_occurrences(const Permutation& p, const Pattern& pat);

/// True when every instance of pat in p is consecutive; vacuously true when
/// there is none. This is the avoidance notion the whole library counts.
bool avoids_nonconsecutive(const Permutation& p, const Pattern& pat);

/// 132-avoidance via the structural characterization: for every entry a, the
/// succeeding entries smaller than a form an initial segment 1..j of the
/// positive integers. Agrees with occurrences(p, 132) being empty.
bool is_132_avoiding_by_characterization(const Permutation& p);

}  // namespace nonconsec
