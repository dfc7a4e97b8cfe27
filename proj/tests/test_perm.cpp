#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "nonconsec/perm.hpp"

using namespace nonconsec;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Independent re-scan used as the oracle for occurrences(): enumerates index
// subsets recursively and classifies each window by its own rank computation,
// sharing no code with the scanning under test.
void naive_scan(const std::vector<int>& w, const std::vector<int>& pat, size_t from,
                std::vector<int>& picked, std::vector<std::vector<int>>& out) {
  if (picked.size() == pat.size()) {
    std::vector<int> window;
    for (int pos : picked) window.push_back(w[static_cast<size_t>(pos) - 1]);
    std::vector<int> ranks(window.size());
    for (size_t i = 0; i < window.size(); ++i)
      for (size_t j = 0; j < window.size(); ++j)
        if (window[j] <= window[i]) ++ranks[i];
    if (ranks == pat) out.push_back(picked);
    return;
  }
  for (size_t i = from; i < w.size(); ++i) {
    picked.push_back(static_cast<int>(i) + 1);
    naive_scan(w, pat, i + 1, picked, out);
    picked.pop_back();
  }
}

std::vector<std::vector<int>> naive_occurrences(const Permutation& p, const Pattern& pat) {
  std::vector<std::vector<int>> out;
  std::vector<int> picked;
  naive_scan(p.entries(), pat.perm().entries(), 0, picked, out);
  return out;
}

const std::vector<std::string> kAllPatterns = {"12", "21",  "123", "132",
                                               "213", "231", "312", "321"};

}  // namespace

TEST_CASE("one-line notation parses and prints") {
  const Permutation p = Permutation::parse("10,9,5,7,6,8,2,4,3,1");
  CHECK(p.size() == 10);
  CHECK(p.at(1) == 10);
  CHECK(p.at(10) == 1);
  CHECK(p.str() == "10,9,5,7,6,8,2,4,3,1");
  CHECK(Permutation::parse("") == Permutation());
  CHECK(Permutation::parse(" 2 , 1 , 3 ") == Permutation(std::vector<int>{2, 1, 3}));
  CHECK(Permutation::parse("1").size() == 1);
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(Permutation::parse("1,1"), invalid_input);
  CHECK_THROWS_AS(Permutation::parse("1,3"), invalid_input);
  CHECK_THROWS_AS(Permutation::parse("0,1"), invalid_input);
  CHECK_THROWS_AS(Permutation::parse("a,b"), invalid_input);
  CHECK_THROWS_AS(Permutation::parse("1,,2"), invalid_input);
  CHECK_THROWS_AS(Permutation(std::vector<int>{2, 2}), invalid_input);
}

TEST_CASE("patterns have length 2 or 3") {
  CHECK(Pattern::parse("21").length() == 2);
  CHECK(Pattern::parse("132").str() == "132");
  CHECK_THROWS_AS(Pattern::parse("1"), invalid_input);
  CHECK_THROWS_AS(Pattern::parse("4321"), invalid_input);
  CHECK_THROWS_AS(Pattern::parse("13"), invalid_input);
  CHECK_THROWS_AS(Pattern::parse("x"), invalid_input);
}

TEST_CASE("reduce relabels by rank") {
  CHECK(reduce({5, 4, 6}) == Permutation::parse("2,1,3"));
  CHECK(reduce({1, 2, 3}) == Permutation::parse("1,2,3"));
  CHECK(reduce({10, 9, 7, 8, 4, 1}) == Permutation::parse("6,5,3,4,2,1"));
  CHECK(reduce({}) == Permutation());
  CHECK(reduce({-7, 12, 0}) == Permutation::parse("1,3,2"));
  CHECK_THROWS_AS(reduce({3, 3}), invalid_input);
}

TEST_CASE("reduce is idempotent on permutations") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : all_perms(n)) CHECK(reduce(p.entries()) == p);
}

TEST_CASE("reverse and complement") {
  CHECK(reverse(Permutation::parse("1,2,3")) == Permutation::parse("3,2,1"));
  CHECK(reverse(Permutation()) == Permutation());
  CHECK(reverse(Permutation::parse("2,1,3")) == Permutation::parse("3,1,2"));
  CHECK(complement(Permutation::parse("1,2,3")) == Permutation::parse("3,2,1"));
  CHECK(complement(Permutation::parse("2,1,3")) == Permutation::parse("2,3,1"));
  CHECK(complement(Permutation::parse("3,2,1")) == Permutation::parse("1,2,3"));
}

TEST_CASE("reverse and complement are commuting involutions") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : all_perms(n)) {
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
      CHECK(reverse(complement(p)) == complement(reverse(p)));
    }
}

TEST_CASE("canonical patterns") {
  CHECK(canonical_pattern(Pattern::parse("12")) == Pattern::parse("12"));
  CHECK(canonical_pattern(Pattern::parse("21")) == Pattern::parse("21"));
  CHECK(canonical_pattern(Pattern::parse("123")) == Pattern::parse("123"));
  CHECK(canonical_pattern(Pattern::parse("321")) == Pattern::parse("321"));
  // The four-element orbit {132, 213, 231, 312} collapses to its
  // lexicographic minimum.
  CHECK(canonical_pattern(Pattern::parse("213")) == Pattern::parse("132"));
  CHECK(canonical_pattern(Pattern::parse("132")) == Pattern::parse("132"));
  CHECK(canonical_pattern(Pattern::parse("231")) == Pattern::parse("132"));
  CHECK(canonical_pattern(Pattern::parse("312")) == Pattern::parse("132"));
  for (const auto& text : kAllPatterns) {
    const Pattern c = canonical_pattern(Pattern::parse(text));
    CHECK(canonical_pattern(c) == c);
  }
}

TEST_CASE("occurrences on the worked examples") {
  const auto inv = occurrences(Permutation::parse("3,2,1"), Pattern::parse("21"));
  REQUIRE(inv.size() == 3);
  CHECK(inv[0].positions == std::vector<int>{1, 2});
  CHECK(inv[1].positions == std::vector<int>{1, 3});
  CHECK(inv[2].positions == std::vector<int>{2, 3});

  CHECK(occurrences(Permutation::parse("1,2,3"), Pattern::parse("321")).empty());

  const auto paper = occurrences(Permutation::parse("10,9,5,7,6,8,2,4,3,1"),
                                 Pattern::parse("132"));
  REQUIRE(paper.size() == 2);
  CHECK(paper[0].positions == std::vector<int>{3, 4, 5});
  CHECK(paper[1].positions == std::vector<int>{7, 8, 9});
  CHECK(paper[0].consecutive());
  CHECK(paper[1].consecutive());
}

TEST_CASE("occurrences agree with an independent naive re-scan") {
  auto choose = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return k < 0 || k > n ? 0LL : r;
  };
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : all_perms(n))
      for (const auto& text : kAllPatterns) {
        const Pattern pat = Pattern::parse(text);
        const auto got = occurrences(p, pat);
        const auto expected = naive_occurrences(p, pat);
        REQUIRE(got.size() == expected.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].positions == expected[i]);
        CHECK(static_cast<long long>(got.size()) <= choose(n, pat.length()));
      }
}

TEST_CASE("avoids_nonconsecutive") {
  CHECK(avoids_nonconsecutive(Permutation::parse("2,1,3"), Pattern::parse("21")));
  CHECK_FALSE(avoids_nonconsecutive(Permutation::parse("3,2,1"), Pattern::parse("21")));
  CHECK(avoids_nonconsecutive(Permutation::parse("10,9,5,7,6,8,2,4,3,1"),
                              Pattern::parse("132")));
  CHECK(avoids_nonconsecutive(Permutation(), Pattern::parse("321")));
  CHECK(avoids_nonconsecutive(Permutation::parse("1"), Pattern::parse("21")));
}

TEST_CASE("avoids_nonconsecutive means every occurrence is consecutive") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : all_perms(n))
      for (const auto& text : kAllPatterns) {
        const Pattern pat = Pattern::parse(text);
        const auto occ = occurrences(p, pat);
        const bool expected = std::all_of(occ.begin(), occ.end(),
                                          [](const Occurrence& o) { return o.consecutive(); });
        CHECK(avoids_nonconsecutive(p, pat) == expected);
      }
}

TEST_CASE("132 characterization") {
  CHECK(is_132_avoiding_by_characterization(Permutation::parse("6,5,3,4,2,1")));
  CHECK_FALSE(is_132_avoiding_by_characterization(Permutation::parse("1,3,2")));
  CHECK(is_132_avoiding_by_characterization(Permutation::parse("2,1,3")));
  CHECK(is_132_avoiding_by_characterization(Permutation()));
}

TEST_CASE("132 characterization agrees with occurrence scanning up to n = 8") {
  const Pattern pat = Pattern::parse("132");
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : all_perms(n))
      CHECK(is_132_avoiding_by_characterization(p) == occurrences(p, pat).empty());
}

TEST_CASE("avoidance is preserved by simultaneous reverse or complement (n <= 5)") {
  for (const auto& text : {"21", "321", "132"}) {
    const Pattern pat = Pattern::parse(text);
    for (int n = 0; n <= 5; ++n)
      for (const auto& p : all_perms(n)) {
        const bool base = avoids_nonconsecutive(p, pat);
        CHECK(base == avoids_nonconsecutive(reverse(p), reverse(pat)));
        CHECK(base == avoids_nonconsecutive(complement(p), complement(pat)));
      }
  }
}

TEST_CASE("scan_occurrences summary matches the full listing") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : all_perms(n))
      for (const auto& text : kAllPatterns) {
        const Pattern pat = Pattern::parse(text);
        const auto occ = occurrences(p, pat);
        const auto scan = scan_occurrences(p, pat);
        const bool any_noncons = std::any_of(occ.begin(), occ.end(),
                                             [](const Occurrence& o) { return !o.consecutive(); });
        CHECK(scan.any_nonconsecutive == any_noncons);
        if (!any_noncons) {
          CHECK(scan.consecutive_count == static_cast<int>(occ.size()));
          CHECK(scan.first_consecutive_start ==
                (occ.empty() ? 0 : occ.front().positions.front()));
        }
      }
}
