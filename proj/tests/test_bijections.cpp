#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "nonconsec/bijections.hpp"
#include "nonconsec/counting.hpp"
#include "nonconsec/oracle.hpp"

using namespace nonconsec;

namespace {
ClassLabel label(ClassKind kind, int n, int k = 0) { return ClassLabel{kind, n, k}; }
}  // namespace

TEST_CASE("scattered set validation") {
  CHECK_NOTHROW(ScatteredSet(1, 4, 2, {1, 3}));
  CHECK_NOTHROW(ScatteredSet(2, 1, 3, {}));  // empty interval, empty set
  CHECK_THROWS_AS(ScatteredSet(1, 4, 2, {1, 2}), invalid_input);
  CHECK_THROWS_AS(ScatteredSet(1, 4, 2, {0, 3}), invalid_input);
  CHECK_THROWS_AS(ScatteredSet(1, 4, 2, {3, 1}), invalid_input);
  CHECK_THROWS_AS(ScatteredSet(1, 4, 2, {5}), invalid_input);
  CHECK(ScatteredSet(2, 9, 3, {4, 8}).str() == "{4,8}");
  CHECK(ScatteredSet(1, 0, 2, {}).str() == "{}");
}

TEST_CASE("gap-2 subsets of [1,n-1] are counted by F(n+1)") {
  for (int n = 0; n <= 9; ++n)
    CHECK(BigCount(ScatteredSet::enumerate(1, n - 1, 2).size()) == fibonacci(n + 1));
}

TEST_CASE("scattered_to_perm") {
  CHECK(scattered_to_perm(4, ScatteredSet(1, 3, 2, {})) == Permutation::parse("1,2,3,4"));
  CHECK(scattered_to_perm(4, ScatteredSet(1, 3, 2, {1, 3})) == Permutation::parse("2,1,4,3"));
  CHECK(scattered_to_perm(0, ScatteredSet(1, -1, 2, {})) == Permutation());
  CHECK_THROWS_AS(scattered_to_perm(4, ScatteredSet(1, 4, 2, {4})), invalid_input);
}

TEST_CASE("all gap-2 subsets for n = 5 give exactly the 8 avoiders") {
  const auto sets = ScatteredSet::enumerate(1, 4, 2);
  REQUIRE(sets.size() == 8);  // F_6
  std::set<Permutation> image;
  for (const auto& s : sets) image.insert(scattered_to_perm(5, s));
  CHECK(image.size() == 8);
  const Pattern p21 = Pattern::parse("21");
  for (const auto& p : enumerate_sn(5))
    CHECK(image.count(p) == (avoids_nonconsecutive(p, p21) ? 1u : 0u));
}

TEST_CASE("perm_to_scattered") {
  CHECK(perm_to_scattered(Permutation::parse("1,2,3,4")) == ScatteredSet(1, 3, 2, {}));
  CHECK(perm_to_scattered(Permutation::parse("2,1,4,3")) == ScatteredSet(1, 3, 2, {1, 3}));
  CHECK_THROWS_AS(perm_to_scattered(Permutation::parse("3,2,1")), invalid_input);
}

TEST_CASE("swap21 round trip over the full domain up to n = 7") {
  const Pattern p21 = Pattern::parse("21");
  for (int n = 0; n <= 7; ++n) {
    for (const auto& s : ScatteredSet::enumerate(1, n - 1, 2))
      CHECK(perm_to_scattered(scattered_to_perm(n, s)) == s);
    for (const auto& p : enumerate_sn(n))
      if (avoids_nonconsecutive(p, p21))
        CHECK(scattered_to_perm(n, perm_to_scattered(p)) == p);
  }
}

TEST_CASE("b_to_d and d_to_b on the worked examples") {
  CHECK(b_to_d(Permutation::parse("3,2,1")) == Permutation::parse("1"));
  CHECK(b_to_d(Permutation::parse("4,2,1,3")) == Permutation::parse("2,1"));
  CHECK(d_to_b(Permutation::parse("1")) == Permutation::parse("3,2,1"));
  CHECK(d_to_b(Permutation::parse("2,1")) == Permutation::parse("4,2,1,3"));

  CHECK(class_contains(label(ClassKind::B, 4), Permutation::parse("4,2,1,3")));
  CHECK(class_contains(label(ClassKind::D, 2), Permutation::parse("2,1")));

  CHECK_THROWS_AS(b_to_d(Permutation::parse("1,2,3")), invalid_input);
  CHECK_THROWS_AS(b_to_d(Permutation::parse("5,3,1,2,4")), invalid_input);
  CHECK_THROWS_AS(d_to_b(Permutation::parse("3,2,1")), invalid_input);
  CHECK_THROWS_AS(d_to_b(Permutation()), invalid_input);
}

TEST_CASE("b_to_d is a bijection B(n) -> D(n-2) up to n = 7") {
  for (int n = 3; n <= 7; ++n) {
    const auto domain = enumerate_class(label(ClassKind::B, n));
    const auto codomain = enumerate_class(label(ClassKind::D, n - 2));
    std::set<Permutation> image;
    for (const auto& p : domain) {
      const Permutation q = b_to_d(p);
      image.insert(q);
      CHECK(d_to_b(q) == p);
    }
    CHECK(image.size() == domain.size());
    CHECK(image == std::set<Permutation>(codomain.begin(), codomain.end()));
    for (const auto& q : codomain) CHECK(b_to_d(d_to_b(q)) == q);
  }
}

TEST_CASE("split_321 on the worked example") {
  const SplitPair pair = split_321(Permutation::parse("1,4,3,2,5"));
  CHECK(pair.sigma == Permutation::parse("1,2"));
  CHECK(pair.tau == Permutation::parse("3,2,1,4"));
  CHECK(class_contains(label(ClassKind::A_nk, 5, 2), Permutation::parse("1,4,3,2,5")));
  CHECK(class_contains(label(ClassKind::C, 2), pair.sigma));
  CHECK(class_contains(label(ClassKind::B, 4), pair.tau));
  CHECK(unsplit_321(pair.sigma, pair.tau) == Permutation::parse("1,4,3,2,5"));
}

TEST_CASE("split_321 rejects k = 1 and non-members") {
  CHECK_THROWS_AS(split_321(Permutation::parse("3,2,1")), invalid_input);    // k = 1
  CHECK_THROWS_AS(split_321(Permutation::parse("1,2,3")), invalid_input);    // no 321
  CHECK_THROWS_AS(split_321(Permutation::parse("4,3,2,1")), invalid_input);  // not in A
  CHECK_THROWS_AS(unsplit_321(Permutation::parse("1"), Permutation::parse("3,2,1")),
                  invalid_input);  // sigma length 1
  CHECK_THROWS_AS(unsplit_321(Permutation::parse("3,2,1"), Permutation::parse("3,2,1")),
                  invalid_input);  // sigma contains a 321
  CHECK_THROWS_AS(unsplit_321(Permutation::parse("1,2"), Permutation::parse("2,1,3")),
                  invalid_input);  // tau not in B
}

TEST_CASE("sigma and tau lengths are k and n-k+1") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k <= n - 2; ++k)
      for (const auto& p : enumerate_class(label(ClassKind::A_nk, n, k))) {
        const SplitPair pair = split_321(p);
        CHECK(pair.sigma.size() == k);
        CHECK(pair.tau.size() == n - k + 1);
      }
}

TEST_CASE("split_321 is a bijection A(n,k) -> C_k x B_{n-k+1} up to n = 7") {
  const auto d = d_sequence(7);
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k <= n - 2; ++k) {
      const auto domain = enumerate_class(label(ClassKind::A_nk, n, k));
      CHECK(BigCount(domain.size()) == catalan(k) * d[static_cast<size_t>(n - k - 1)]);
      std::set<std::pair<Permutation, Permutation>> image;
      for (const auto& p : domain) {
        const SplitPair pair = split_321(p);
        CHECK(class_contains(label(ClassKind::C, k), pair.sigma));
        CHECK(class_contains(label(ClassKind::B, n - k + 1), pair.tau));
        CHECK(unsplit_321(pair.sigma, pair.tau) == p);
        image.insert({pair.sigma, pair.tau});
      }
      CHECK(image.size() == domain.size());
      // the image is the whole product set, and the inverse round-trips
      size_t product_size = 0;
      for (const auto& sigma : enumerate_class(label(ClassKind::C, k)))
        for (const auto& tau : enumerate_class(label(ClassKind::B, n - k + 1))) {
          ++product_size;
          CHECK(image.count({sigma, tau}) == 1);
          const Permutation p = unsplit_321(sigma, tau);
          const SplitPair back = split_321(p);
          CHECK(back.sigma == sigma);
          CHECK(back.tau == tau);
        }
      CHECK(product_size == image.size());
    }
}

TEST_CASE("decompose_132 on the paper's example") {
  const auto dec = decompose_132(Permutation::parse("10,9,5,7,6,8,2,4,3,1"));
  CHECK(dec.middles == ScatteredSet(2, 9, 3, {4, 8}));
  CHECK(dec.remainder == Permutation::parse("6,5,3,4,2,1"));
  CHECK(compose_132(10, dec.middles, dec.remainder) ==
        Permutation::parse("10,9,5,7,6,8,2,4,3,1"));
}

TEST_CASE("compose_132 trace matches the worked construction") {
  const ScatteredSet s(2, 9, 3, {4, 8});
  const Permutation q = Permutation::parse("6,5,3,4,2,1");
  const auto trace = compose_132_trace(10, s, q);
  REQUIRE(trace.size() == 3);
  CHECK(trace[0] == std::vector<int>{6, 5, 0, 3, 0, 4, 0, 2, 0, 1});
  CHECK(trace[1] == std::vector<int>{8, 7, 3, 5, 4, 6, 0, 2, 0, 1});
  CHECK(trace[2] == std::vector<int>{10, 9, 5, 7, 6, 8, 2, 4, 3, 1});
}

TEST_CASE("decompose_132 with no 132 returns the permutation itself") {
  const Permutation p = Permutation::parse("2,1,3");
  const auto dec = decompose_132(p);
  CHECK(dec.middles.size() == 0);
  CHECK(dec.remainder == p);
}

TEST_CASE("the unique E(3,1) member") {
  const auto dec = decompose_132(Permutation::parse("1,3,2"));
  CHECK(dec.middles == ScatteredSet(2, 2, 3, {2}));
  CHECK(dec.remainder == Permutation::parse("1"));
  CHECK(compose_132(3, ScatteredSet(2, 2, 3, {2}), Permutation::parse("1")) ==
        Permutation::parse("1,3,2"));
  const auto e31 = enumerate_class(label(ClassKind::E_nk, 3, 1));
  REQUIRE(e31.size() == 1);
  CHECK(e31[0] == Permutation::parse("1,3,2"));
}

TEST_CASE("compose_132 validation") {
  CHECK_THROWS_AS(decompose_132(Permutation::parse("1,4,2,5,3")), invalid_input);
  CHECK_THROWS_AS(compose_132(6, ScatteredSet(2, 5, 3, {3}), Permutation::parse("1,2,3")),
                  invalid_input);  // wrong remainder length
  CHECK_THROWS_AS(compose_132(7, ScatteredSet(2, 6, 3, {3}), Permutation::parse("1,3,2")),
                  invalid_input);  // remainder contains a 132
  CHECK_THROWS_AS(compose_132(7, ScatteredSet(1, 6, 3, {3}), Permutation::parse("1,3,2")),
                  invalid_input);  // wrong frame
}

TEST_CASE("decompose/compose round trip over E(n,k) up to n = 7") {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n / 3; ++k) {
      const auto domain = enumerate_class(label(ClassKind::E_nk, n, k));
      std::set<std::pair<std::string, std::string>> image;
      for (const auto& p : domain) {
        const auto dec = decompose_132(p);
        CHECK(dec.middles.size() == k);
        CHECK(occurrences(dec.remainder, Pattern::parse("132")).empty());
        CHECK(compose_132(n, dec.middles, dec.remainder) == p);
        image.insert({dec.middles.str(), dec.remainder.str()});
      }
      CHECK(image.size() == domain.size());
    }
}

TEST_CASE("compose/decompose round trip over all pairs up to n = 7") {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n / 3; ++k) {
      const auto q_pool = enumerate_class(label(ClassKind::E_nk, n - 2 * k, 0));
      size_t pairs = 0;
      for (const auto& s : ScatteredSet::enumerate(2, n - 1, 3)) {
        if (s.size() != k) continue;
        for (const auto& q : q_pool) {
          ++pairs;
          const Permutation p = compose_132(n, s, q);
          CHECK(class_contains(label(ClassKind::E_nk, n, k), p));
          const auto dec = decompose_132(p);
          CHECK(dec.middles == s);
          CHECK(dec.remainder == q);
        }
      }
      CHECK(BigCount(pairs) == binomial(n - 2 * k, k) * catalan(n - 2 * k));
    }
}
