#include "nonconsec/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace nonconsec {

namespace {

int parse_int(const std::string& token) {
  size_t b = token.find_first_not_of(" \t");
  size_t e = token.find_last_not_of(" \t");
  if (b == std::string::npos) throw invalid_input("empty entry in permutation text");
  int value = 0;
  const char* first = token.data() + b;
  const char* last = token.data() + e + 1;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw invalid_input("not an integer: '" + token + "'");
  return value;
}

bool window_matches(int a, int b, const Permutation& q) {
  return (a < b) == (q.at(1) < q.at(2));
}

bool window_matches(int a, int b, int c, const Permutation& q) {
  return (a < b) == (q.at(1) < q.at(2)) && (a < c) == (q.at(1) < q.at(3)) &&
         (b < c) == (q.at(2) < q.at(3));
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
      throw invalid_input("entries are not a permutation of [" + std::to_string(n) + "]");
    seen[static_cast<size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw invalid_input("permutation length must be nonnegative");
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos) return Permutation();
  std::vector<int> entries;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    entries.push_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Permutation(std::move(entries));
}

std::string Permutation::str() const {
  std::string s;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

Pattern::Pattern(Permutation p) : perm_(std::move(p)) {
  if (perm_.size() < 2 || perm_.size() > 3)
    throw invalid_input("pattern length must be 2 or 3");
}

Pattern Pattern::parse(const std::string& digits) {
  std::vector<int> entries;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw invalid_input("bad pattern text: '" + digits + "'");
    entries.push_back(ch - '0');
  }
  return Pattern(Permutation(std::move(entries)));
}

std::string Pattern::str() const {
  std::string s;
  for (int v : perm_.entries()) s += static_cast<char>('0' + v);
  return s;
}

bool Occurrence::consecutive() const {
  for (size_t i = 1; i < positions.size(); ++i)
    if (positions[i] != positions[i - 1] + 1) return false;
  return true;
}

Permutation reduce(const std::vector<int>& word) {
  const size_t n = word.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return word[static_cast<size_t>(i)] < word[static_cast<size_t>(j)]; });
  for (size_t r = 1; r < n; ++r)
    if (word[static_cast<size_t>(order[r])] == word[static_cast<size_t>(order[r - 1])])
      throw invalid_input("reduce requires distinct entries");
  std::vector<int> out(n);
  for (size_t r = 0; r < n; ++r) out[static_cast<size_t>(order[r])] = static_cast<int>(r) + 1;
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n));
  for (int v : p.entries()) e.push_back(n + 1 - v);
  return Permutation(std::move(e));
}

Pattern reverse(const Pattern& pat) { return Pattern(reverse(pat.perm())); }

Pattern complement(const Pattern& pat) { return Pattern(complement(pat.perm())); }

Pattern canonical_pattern(const Pattern& pat) {
  const Pattern rc = reverse(complement(pat));
  if (rc == pat) return pat;
  std::vector<Permutation> orbit = {pat.perm(), reverse(pat).perm(), complement(pat).perm(),
                                    rc.perm()};
  return Pattern(*std::min_element(orbit.begin(), orbit.end()));
}

std::vector<Occurrence> occurrences(const Permutation& p, const Pattern& pat) {
  const auto& w = p.entries();
  const int n = p.size();
  const Permutation& q = pat.perm();
  std::vector<Occurrence> found;
  if (pat.length() == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (window_matches(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)], q))
          found.push_back(Occurrence{{i + 1, j + 1}});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int l = j + 1; l < n; ++l)
          if (window_matches(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)],
                             w[static_cast<size_t>(l)], q))
            found.push_back(Occurrence{{i + 1, j + 1, l + 1}});
  }
  return found;
}

bool contains(const Permutation& p, const Pattern& pat) {
  const auto& w = p.entries();
  const int n = p.size();
  const Permutation& q = pat.perm();
  if (pat.length() == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (window_matches(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)], q)) return true;
    return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        if (window_matches(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)],
                           w[static_cast<size_t>(l)], q))
          return true;
  return false;
}

OccurrenceScan scan_occurrences(const Permutation& p, const Pattern& pat) {
  const auto& w = p.entries();
  const int n = p.size();
  const Permutation& q = pat.perm();
  OccurrenceScan scan;
  if (pat.length() == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (window_matches(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)], q)) {
          if (j != i + 1) {
            scan.any_nonconsecutive = true;
            return scan;
          }
          ++scan.consecutive_count;
          if (scan.first_consecutive_start == 0) scan.first_consecutive_start = i + 1;
        }
    return scan;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        if (window_matches(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)],
                           w[static_cast<size_t>(l)], q)) {
          if (j != i + 1 || l != j + 1) {
            scan.any_nonconsecutive = true;
            return scan;
          }
          ++scan.consecutive_count;
          if (scan.first_consecutive_start == 0) scan.first_consecutive_start = i + 1;
        }
  return scan;
}

bool avoids_nonconsecutive(const Permutation& p, const Pattern& pat) {
  return !scan_occurrences(p, pat).any_nonconsecutive;
}

bool is_132_avoiding_by_characterization(const Permutation& p) {
  const auto& w = p.entries();
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    int count = 0;
    int largest = 0;
    for (int j = i + 1; j < n; ++j)
      if (w[static_cast<size_t>(j)] < w[static_cast<size_t>(i)]) {
        ++count;
        largest = std::max(largest, w[static_cast<size_t>(j)]);
      }
    // {1..j} is the only set of `count` distinct positive values with
    // maximum equal to `count`.
    if (largest != count) return false;
  }
  return true;
}

}  // namespace nonconsec
