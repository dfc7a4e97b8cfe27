#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "nonconsec/errors.hpp"

namespace nonconsec {

/// Arbitrary-precision nonnegative integer; the value type of every counting
/// operation. All arithmetic is exact.
using BigCount = boost::multiprecision::cpp_int;

/// Fibonacci numbers with F_0 = 0, F_1 = F_2 = 1. The number of permutations
/// of [n] avoiding a nonconsecutive 21 is fibonacci(n + 1).
BigCount fibonacci(int m);

/// Catalan number C_m = binom(2m, m) / (m + 1).
BigCount catalan(int m);

/// Binomial coefficient; zero when k < 0 or k > n.
BigCount binomial(int n, int k);

/// d_n = |D_n| by the convolution recurrence
///   d_n = C_n + sum_{k=1}^{n-3} C_{k+1} d_{n-2-k},
/// valid for n >= 1 with an empty sum for n <= 3 (no initial condition
/// needed). Returns a vector indexed by n; index 0 holds 0, matching the
/// series D(x) = sum_{n>=1} d_n x^n.
std::vector<BigCount> d_sequence(int n_max);

/// a_n = |A_n|, the full 321 count, computed two independent ways and
/// cross-checked:
///   a_n = d_n + d_{n-2}            (the elimination form, d_0 = d_{-1} = 0)
///   a_n = C_n + sum_{k=1}^{n-2} C_k d_{n-k-1}   (the convolution form)
/// Throws internal_error if the two routes ever disagree. Returns a vector
/// indexed by n; index 0 holds 1 (the empty permutation avoids everything).
std::vector<BigCount> a_sequence_recurrence(int n_max);

/// The 132 count by the closed sum  sum_{k=0}^{floor(n/3)} binom(n-2k, k) C_{n-2k},
/// the k = 0 term covering the permutations with no 132 at all.
BigCount count_132_formula(int n);

}  // namespace nonconsec
