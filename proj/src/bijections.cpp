#include "nonconsec/bijections.hpp"

#include <algorithm>
#include <numeric>

namespace nonconsec {

namespace {

const Pattern& pat21() {
  static const Pattern p = Pattern::parse("21");
  return p;
}

const Pattern& pat321() {
  static const Pattern p = Pattern::parse("321");
  return p;
}

const Pattern& pat132() {
  static const Pattern p = Pattern::parse("132");
  return p;
}

bool starts_with_desc3(const Permutation& p) {
  return p.size() >= 3 && p.at(1) > p.at(2) && p.at(2) > p.at(3);
}

}  // namespace

ScatteredSet::ScatteredSet(int lo, int hi, int min_gap, std::vector<int> elements)
    : lo_(lo), hi_(hi), min_gap_(min_gap), elements_(std::move(elements)) {
  if (min_gap_ < 1) throw invalid_input("scattered-set gap must be at least 1");
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < lo_ || elements_[i] > hi_)
      throw invalid_input("scattered-set element " + std::to_string(elements_[i]) +
                          " outside [" + std::to_string(lo_) + "," + std::to_string(hi_) + "]");
    if (i > 0 && elements_[i] - elements_[i - 1] < min_gap_)
      throw invalid_input("scattered-set elements " + std::to_string(elements_[i - 1]) + "," +
                          std::to_string(elements_[i]) + " closer than gap " +
                          std::to_string(min_gap_));
  }
}

std::string ScatteredSet::str() const {
  std::string s = "{";
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  return s + "}";
}

std::vector<ScatteredSet> ScatteredSet::enumerate(int lo, int hi, int min_gap) {
  std::vector<ScatteredSet> out;
  std::vector<int> path;
  auto extend = [&](auto&& self, int from) -> void {
    out.emplace_back(lo, hi, min_gap, path);
    for (int e = from; e <= hi; ++e) {
      path.push_back(e);
      self(self, e + min_gap);
      path.pop_back();
    }
  };
  extend(extend, lo);
  return out;
}

Permutation scattered_to_perm(int n, const ScatteredSet& s) {
  if (n < 0) throw invalid_input("n must be nonnegative");
  if (s.lo() != 1 || s.hi() != n - 1 || s.min_gap() != 2)
    throw invalid_input("expected a gap-2 scattered subset of [1," + std::to_string(n - 1) + "]");
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  for (int i : s.elements()) std::swap(e[static_cast<size_t>(i) - 1], e[static_cast<size_t>(i)]);
  return Permutation(std::move(e));
}

ScatteredSet perm_to_scattered(const Permutation& p) {
  if (!avoids_nonconsecutive(p, pat21()))
    throw invalid_input("permutation contains a nonconsecutive 21");
  std::vector<int> descents;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) descents.push_back(i);
  return ScatteredSet(1, p.size() - 1, 2, std::move(descents));
}

Permutation b_to_d(const Permutation& p) {
  const int n = p.size();
  if (n < 3 || !starts_with_desc3(p) || !avoids_nonconsecutive(p, pat321()))
    throw invalid_input("not a member of B(" + std::to_string(n) + ")");
  if (p.at(2) != 2 || p.at(3) != 1)
    throw invalid_input("B member must have 2 in position 2 and 1 in position 3");
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n) - 2);
  e.push_back(p.at(1) - 2);
  for (int i = 4; i <= n; ++i) e.push_back(p.at(i) - 2);
  return Permutation(std::move(e));
}

Permutation d_to_b(const Permutation& q) {
  const int m = q.size();
  if (m < 1) throw invalid_input("d_to_b needs a nonempty permutation (B(2) is empty)");
  if (starts_with_desc3(q) || !avoids_nonconsecutive(q, pat321()))
    throw invalid_input("not a member of D(" + std::to_string(m) + ")");
  std::vector<int> e;
  e.reserve(static_cast<size_t>(m) + 2);
  e.push_back(q.at(1) + 2);
  e.push_back(2);
  e.push_back(1);
  for (int i = 2; i <= m; ++i) e.push_back(q.at(i) + 2);
  return Permutation(std::move(e));
}

SplitPair split_321(const Permutation& p) {
  const int n = p.size();
  const auto scan = scan_occurrences(p, pat321());
  if (scan.any_nonconsecutive)
    throw invalid_input("not a member of A(" + std::to_string(n) + ")");
  if (scan.consecutive_count == 0) throw invalid_input("permutation contains no 321");
  const int k = scan.first_consecutive_start;
  if (k < 2)
    throw invalid_input("split_321 needs the first 321 at position k >= 2 (A(n,1) is B(n))");
  std::vector<int> sigma_vals(p.entries().begin(), p.entries().begin() + (k - 1));
  sigma_vals.push_back(p.at(k + 2));
  std::vector<int> sorted = sigma_vals;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i)
    if (sorted[static_cast<size_t>(i)] != i + 1)
      throw invalid_input("first k-1 entries plus position k+2 do not comprise {1.." +
                          std::to_string(k) + "}");
  Permutation sigma(std::move(sigma_vals));
  Permutation tau =
      reduce(std::vector<int>(p.entries().begin() + (k - 1), p.entries().end()));
  return SplitPair{std::move(sigma), std::move(tau)};
}

Permutation unsplit_321(const Permutation& sigma, const Permutation& tau) {
  const int k = sigma.size();
  const int m = tau.size();
  if (k < 2) throw invalid_input("sigma must have length >= 2 (k = 1 is outside the split)");
  if (contains(sigma, pat321())) throw invalid_input("sigma must contain no 321");
  if (m < 3 || !starts_with_desc3(tau) || !avoids_nonconsecutive(tau, pat321()))
    throw invalid_input("tau must be a member of B(" + std::to_string(m) + ")");
  const int n = k + m - 1;
  // tau's order-isomorphic copy lives on {sigma_k} u {k+1..n}, which is
  // already sorted with sigma_k first.
  std::vector<int> values;
  values.reserve(static_cast<size_t>(m));
  values.push_back(sigma.at(k));
  for (int v = k + 1; v <= n; ++v) values.push_back(v);
  std::vector<int> e(sigma.entries().begin(), sigma.entries().begin() + (k - 1));
  for (int i = 1; i <= m; ++i) e.push_back(values[static_cast<size_t>(tau.at(i)) - 1]);
  return Permutation(std::move(e));
}

Decomposition132 decompose_132(const Permutation& p) {
  const int n = p.size();
  const auto occ = occurrences(p, pat132());
  std::vector<int> middles;
  for (const auto& o : occ) {
    if (!o.consecutive())
      throw invalid_input("permutation contains a nonconsecutive 132");
    middles.push_back(o.positions[1]);
  }
  ScatteredSet s(2, n - 1, 3, std::move(middles));
  std::vector<bool> drop(static_cast<size_t>(n), false);
  for (int mid : s.elements()) {
    drop[static_cast<size_t>(mid) - 2] = true;
    drop[static_cast<size_t>(mid)] = true;
  }
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(n) - 2 * s.elements().size());
  for (int i = 0; i < n; ++i)
    if (!drop[static_cast<size_t>(i)]) rest.push_back(p.entries()[static_cast<size_t>(i)]);
  return Decomposition132{std::move(s), reduce(rest)};
}

std::vector<std::vector<int>> compose_132_trace(int n, const ScatteredSet& s,
                                                const Permutation& q) {
  if (n < 0) throw invalid_input("n must be nonnegative");
  if (s.lo() != 2 || s.hi() != n - 1 || s.min_gap() != 3)
    throw invalid_input("expected a gap-3 scattered subset of [2," + std::to_string(n - 1) + "]");
  if (contains(q, pat132())) throw invalid_input("remainder permutation must contain no 132");
  if (q.size() != n - 2 * s.size())
    throw invalid_input("remainder length must be n - 2k = " +
                        std::to_string(n - 2 * s.size()) + ", got " + std::to_string(q.size()));

  std::vector<int> arr(static_cast<size_t>(n), 0);
  std::vector<bool> blank(static_cast<size_t>(n), false);
  for (int mid : s.elements()) {
    blank[static_cast<size_t>(mid) - 2] = true;
    blank[static_cast<size_t>(mid)] = true;
  }
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (!blank[static_cast<size_t>(i)])
      arr[static_cast<size_t>(i)] = q.entries()[static_cast<size_t>(next++)];

  std::vector<std::vector<int>> trace{arr};
  for (int mid : s.elements()) {
    const size_t m0 = static_cast<size_t>(mid) - 1;
    const int a = arr[m0];
    int count = 0;
    int largest = 0;
    for (size_t pos = m0 + 1; pos < arr.size(); ++pos)
      if (arr[pos] != 0 && arr[pos] < a) {
        ++count;
        largest = std::max(largest, arr[pos]);
      }
    if (largest != count)
      throw internal_error("entries after position " + std::to_string(mid) +
                           " and smaller than " + std::to_string(a) +
                           " do not form an initial segment");
    const int j = count;
    for (auto& v : arr)
      if (v > j) v += 2;  // the intact initial segment is exactly the values 1..j
    arr[m0 - 1] = j + 1;
    arr[m0 + 1] = j + 2;
    trace.push_back(arr);
  }
  return trace;
}

Permutation compose_132(int n, const ScatteredSet& s, const Permutation& q) {
  return Permutation(compose_132_trace(n, s, q).back());
}

}  // namespace nonconsec
