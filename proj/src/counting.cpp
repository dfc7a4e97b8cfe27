#include "nonconsec/counting.hpp"

#include "nonconsec/perm.hpp"

namespace nonconsec {

BigCount fibonacci(int m) {
  if (m < 0) throw invalid_input("fibonacci index must be nonnegative");
  BigCount prev = 0, cur = 1;
  if (m == 0) return prev;
  for (int i = 1; i < m; ++i) {
    BigCount next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigCount binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r now holds binomial(n-k+i, i)
  }
  return r;
}

BigCount catalan(int m) {
  if (m < 0) throw invalid_input("catalan index must be nonnegative");
  return binomial(2 * m, m) / (m + 1);
}

std::vector<BigCount> d_sequence(int n_max) {
  if (n_max < 1) throw invalid_input("d_sequence needs n_max >= 1");
  std::vector<BigCount> cat(static_cast<size_t>(n_max) + 1);
  for (int i = 0; i <= n_max; ++i) cat[static_cast<size_t>(i)] = catalan(i);
  std::vector<BigCount> d(static_cast<size_t>(n_max) + 1);
  d[0] = 0;
  for (int n = 1; n <= n_max; ++n) {
    BigCount v = cat[static_cast<size_t>(n)];
    for (int k = 1; k <= n - 3; ++k)
      v += cat[static_cast<size_t>(k) + 1] * d[static_cast<size_t>(n - 2 - k)];
    d[static_cast<size_t>(n)] = v;
  }
  return d;
}

std::vector<BigCount> a_sequence_recurrence(int n_max) {
  if (n_max < 1) throw invalid_input("a_sequence_recurrence needs n_max >= 1");
  const auto d = d_sequence(n_max);
  std::vector<BigCount> a(static_cast<size_t>(n_max) + 1);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigCount elim = d[static_cast<size_t>(n)];
    if (n - 2 >= 1) elim += d[static_cast<size_t>(n - 2)];
    BigCount conv = catalan(n);
    for (int k = 1; k <= n - 2; ++k)
      conv += catalan(k) * d[static_cast<size_t>(n - k - 1)];
    if (elim != conv)
      throw internal_error("a_n routes disagree at n=" + std::to_string(n) + ": " + elim.str() +
                           " vs " + conv.str());
    a[static_cast<size_t>(n)] = elim;
  }
  return a;
}

BigCount count_132_formula(int n) {
  if (n < 0) throw invalid_input("count_132_formula needs n >= 0");
  BigCount total = 0;
  for (int k = 0; k <= n / 3; ++k) total += binomial(n - 2 * k, k) * catalan(n - 2 * k);
  return total;
}

}  // namespace nonconsec
