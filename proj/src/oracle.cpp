#include "nonconsec/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace nonconsec {

namespace {

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

void check_ceiling(int n, int ceiling) {
  if (n < 0) throw invalid_input("n must be nonnegative");
  if (n > ceiling)
    throw invalid_input("n=" + std::to_string(n) + " exceeds the oracle ceiling " +
                        std::to_string(ceiling) +
                        "; raise it explicitly (--oracle-ceiling) to override");
}

// Visits all of S_n in lexicographic order; n = 0 visits the empty word once.
template <typename Fn>
void for_each_word(int n, Fn&& fn) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    fn(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

int parse_label_int(const std::string& text, size_t b, size_t e) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e, value);
  if (ec != std::errc() || ptr != text.data() + e)
    throw invalid_input("bad class label: '" + text + "'");
  return value;
}

}  // namespace

ClassLabel ClassLabel::parse(const std::string& text) {
  if (text.size() < 4 || text[1] != '(' || text.back() != ')')
    throw invalid_input("bad class label: '" + text + "' (expected e.g. A(5) or E(10,2))");
  ClassKind kind;
  switch (text[0]) {
    case 'A': kind = ClassKind::A; break;
    case 'B': kind = ClassKind::B; break;
    case 'C': kind = ClassKind::C; break;
    case 'D': kind = ClassKind::D; break;
    case 'E': kind = ClassKind::E; break;
    default: throw invalid_input("bad class label: '" + text + "'");
  }
  ClassLabel label;
  const size_t comma = text.find(',');
  if (comma == std::string::npos) {
    label.kind = kind;
    label.n = parse_label_int(text, 2, text.size() - 1);
  } else {
    if (kind == ClassKind::A)
      label.kind = ClassKind::A_nk;
    else if (kind == ClassKind::E)
      label.kind = ClassKind::E_nk;
    else
      throw invalid_input("class " + std::string(1, text[0]) + " takes no k parameter");
    label.n = parse_label_int(text, 2, comma);
    label.k = parse_label_int(text, comma + 1, text.size() - 1);
  }
  return label;
}

std::string ClassLabel::str() const {
  switch (kind) {
    case ClassKind::A: return "A(" + std::to_string(n) + ")";
    case ClassKind::B: return "B(" + std::to_string(n) + ")";
    case ClassKind::C: return "C(" + std::to_string(n) + ")";
    case ClassKind::D: return "D(" + std::to_string(n) + ")";
    case ClassKind::E: return "E(" + std::to_string(n) + ")";
    case ClassKind::A_nk: return "A(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case ClassKind::E_nk: return "E(" + std::to_string(n) + "," + std::to_string(k) + ")";
  }
  return {};
}

void ClassLabel::validate() const {
  if (n < 0) throw invalid_input("class size n must be nonnegative");
  if (kind == ClassKind::A_nk && (k < 1 || k > n - 2))
    throw invalid_input("A(n,k) requires 1 <= k <= n-2; got " + str());
  if (kind == ClassKind::E_nk && (k < 0 || k > n / 3))
    throw invalid_input("E(n,k) requires 0 <= k <= n/3; got " + str());
}

bool class_contains(const ClassLabel& label, const Permutation& p) {
  label.validate();
  if (p.size() != label.n) return false;
  switch (label.kind) {
    case ClassKind::A:
      return !scan_occurrences(p, pat321()).any_nonconsecutive;
    case ClassKind::B:
      return starts_with_desc3(p) && !scan_occurrences(p, pat321()).any_nonconsecutive;
    case ClassKind::C: {
      const auto scan = scan_occurrences(p, pat321());
      return !scan.any_nonconsecutive && scan.consecutive_count == 0;
    }
    case ClassKind::D:
      return !starts_with_desc3(p) && !scan_occurrences(p, pat321()).any_nonconsecutive;
    case ClassKind::A_nk: {
      const auto scan = scan_occurrences(p, pat321());
      return !scan.any_nonconsecutive && scan.consecutive_count > 0 &&
             scan.first_consecutive_start == label.k;
    }
    case ClassKind::E:
      return !scan_occurrences(p, pat132()).any_nonconsecutive;
    case ClassKind::E_nk: {
      const auto scan = scan_occurrences(p, pat132());
      return !scan.any_nonconsecutive && scan.consecutive_count == label.k;
    }
  }
  return false;
}

std::vector<Permutation> enumerate_sn(int n, int ceiling) {
  check_ceiling(n, ceiling);
  std::vector<Permutation> out;
  for_each_word(n, [&](const std::vector<int>& word) { out.emplace_back(word); });
  return out;
}

std::vector<Permutation> enumerate_class(const ClassLabel& label, int ceiling) {
  label.validate();
  check_ceiling(label.n, ceiling);
  std::vector<Permutation> out;
  for_each_word(label.n, [&](const std::vector<int>& word) {
    Permutation p(word);
    if (class_contains(label, p)) out.push_back(std::move(p));
  });
  return out;
}

BigCount count_class(const ClassLabel& label, int ceiling) {
  label.validate();
  check_ceiling(label.n, ceiling);
  BigCount count = 0;
  for_each_word(label.n, [&](const std::vector<int>& word) {
    if (class_contains(label, Permutation(word))) ++count;
  });
  return count;
}

BigCount count_avoiders_bruteforce(int n, const Pattern& pat, int ceiling) {
  check_ceiling(n, ceiling);
  BigCount count = 0;
  for_each_word(n, [&](const std::vector<int>& word) {
    if (!scan_occurrences(Permutation(word), pat).any_nonconsecutive) ++count;
  });
  return count;
}

Classes321 sweep_321_classes(int n, int ceiling) {
  check_ceiling(n, ceiling);
  Classes321 c;
  c.a = c.b = c.c = c.d = 0;
  c.a_k.assign(static_cast<size_t>(std::max(n - 1, 1)), 0);
  for_each_word(n, [&](const std::vector<int>& word) {
    Permutation p(word);
    const auto scan = scan_occurrences(p, pat321());
    if (scan.any_nonconsecutive) return;
    ++c.a;
    if (starts_with_desc3(p))
      ++c.b;
    else
      ++c.d;
    if (scan.consecutive_count == 0)
      ++c.c;
    else
      ++c.a_k[static_cast<size_t>(scan.first_consecutive_start)];
  });
  return c;
}

Classes132 sweep_132_classes(int n, int ceiling) {
  check_ceiling(n, ceiling);
  Classes132 c;
  c.e = 0;
  c.e_k.assign(static_cast<size_t>(n / 3) + 1, 0);
  for_each_word(n, [&](const std::vector<int>& word) {
    const auto scan = scan_occurrences(Permutation(word), pat132());
    if (scan.any_nonconsecutive) return;
    ++c.e;
    ++c.e_k[static_cast<size_t>(scan.consecutive_count)];
  });
  return c;
}

}  // namespace nonconsec
