#include "doctest.h"
#include "oracles.hpp"
#include "parcat/errors.hpp"
#include "parcat/perm.hpp"
#include "parcat/tamari.hpp"

using namespace parcat;

TEST_CASE("inversion sets") {
  CHECK(inversion_set(Permutation::identity(4)).size() == 0);
  CHECK(inversion_set(Permutation::parse("231")).pairs() == std::vector<PosPair>{{1, 3}, {2, 3}});
  CHECK(inversion_set(Permutation::parse("4321")).size() == 6);
}

TEST_CASE("pair rank is lexicographic and dense") {
  for (int n = 2; n <= 7; ++n) {
    std::size_t expect = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(InversionSet::rank(n, i, j) == expect++);
    CHECK(expect == InversionSet::pair_count(n));
  }
}

TEST_CASE("weak order comparisons") {
  CHECK(weak_leq(Permutation::identity(3), Permutation::parse("312")));
  CHECK(weak_leq(Permutation::parse("2143"), Permutation::parse("3142")));
  CHECK_FALSE(weak_leq(Permutation::parse("231"), Permutation::parse("312")));
  CHECK_FALSE(weak_leq(Permutation::parse("312"), Permutation::parse("231")));
  CHECK_THROWS_AS(weak_leq(Permutation::parse("21"), Permutation::parse("123")), InvalidInput);
}

TEST_CASE("lower covers and descents") {
  CHECK(lower_covers(Permutation::identity(3)).empty());
  CHECK(lower_covers(Permutation::parse("213")) == std::vector<Permutation>{Permutation::parse("123")});
  // 3124 is not below 3142: its inversion (1,3) is absent from inv(3142)
  CHECK(lower_covers(Permutation::parse("3142")) == std::vector<Permutation>{Permutation::parse("2143")});
  CHECK_FALSE(weak_leq(Permutation::parse("3124"), Permutation::parse("3142")));
  CHECK(descent_pairs(Permutation::parse("4231")) == std::vector<PosPair>{{1, 3}, {2, 4}});
  CHECK(descent_pairs(Permutation::parse("2143")) == std::vector<PosPair>{{1, 2}, {3, 4}});
  // every lower cover removes exactly one value-consecutive inversion
  for (const auto& w : oracle::all_permutations(5))
    for (const auto& u : lower_covers(w)) {
      auto iw = inversion_set(w).pairs(), iu = inversion_set(u).pairs();
      CHECK(iu.size() + 1 == iw.size());
      CHECK(inversion_set(u).is_subset_of(inversion_set(w)));
      for (auto pr : iw)
        if (!inversion_set(u).contains(pr.first, pr.second)) CHECK(w(pr.first) == w(pr.second) + 1);
    }
}

TEST_CASE("lower covers match the brute-force cover relation, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto all = oracle::all_permutations(n);
    for (const auto& w : all) {
      std::vector<Permutation> expect;
      for (const auto& u : all)
        if (weak_leq(u, w) && inversion_set(u).size() + 1 == inversion_set(w).size()) expect.push_back(u);
      auto got = lower_covers(w);
      std::sort(got.begin(), got.end());
      CHECK(got == expect);
      auto up = upper_covers(w);
      for (const auto& v : up) {
        auto lv = lower_covers(v);
        CHECK(std::find(lv.begin(), lv.end(), w) != lv.end());
      }
    }
  }
}

TEST_CASE("regions") {
  auto c = j_regions(4, {2});
  CHECK(c.regions() == std::vector<PosPair>{{1, 1}, {2, 3}, {4, 4}});
  auto big = j_regions(10, {1, 2, 3, 5, 8});
  CHECK(big.regions() == std::vector<PosPair>{{1, 4}, {5, 6}, {7, 7}, {8, 9}, {10, 10}});
  CHECK(j_regions(3, {}).region_count() == 3);
  CHECK_THROWS_AS(j_regions(3, {3}), InvalidInput);
  CHECK(parse_j_list("1,2, 3") == std::vector<int>{1, 2, 3});
  CHECK(parse_j_list("s1 s4") == std::vector<int>{1, 4});
  CHECK(parse_j_list("").empty());
}

TEST_CASE("quotient membership and enumeration") {
  auto c = j_regions(4, {2});
  CHECK(is_quotient_member(Permutation::parse("4|23|1"), c));
  CHECK_FALSE(is_quotient_member(Permutation::parse("1|32|4"), c));
  CHECK(is_quotient_member(Permutation::identity(4), c));
  CHECK(enumerate_quotient(c).size() == 12);
  CHECK(enumerate_quotient(j_regions(3, {})).size() == 6);
  CHECK(enumerate_quotient(j_regions(4, {1, 2, 3})).size() == 1);
  CHECK(quotient_longest(c) == Permutation::parse("4231"));
  CHECK(quotient_longest(j_regions(4, {})) == Permutation::parse("4321"));
  CHECK(quotient_longest(j_regions(4, {1, 2, 3})) == Permutation::identity(4));
}

TEST_CASE("quotient sizes equal the multinomial for n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto ctx = j_regions(n, j);
      auto q = enumerate_quotient(ctx);
      CHECK(q.size() == quotient_size(ctx));
      CHECK(std::is_sorted(q.begin(), q.end()));
      const auto top = quotient_longest(ctx);
      for (const auto& w : q) {
        CHECK(is_quotient_member(w, ctx));
        if (n <= 6) CHECK(weak_leq(w, top));
      }
    }
}

TEST_CASE("meets and joins agree with the poset computation") {
  const auto all = oracle::all_permutations(4);
  auto weak = weak_quotient_poset(j_regions(4, {}), all);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      CHECK(all[static_cast<std::size_t>(meet(weak, static_cast<int>(a), static_cast<int>(b)))] == weak_meet(all[a], all[b]));
      CHECK(all[static_cast<std::size_t>(join(weak, static_cast<int>(a), static_cast<int>(b)))] == weak_join(all[a], all[b]));
    }
}

TEST_CASE("weak order on S_n is a lattice for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto all = oracle::all_permutations(n);
    auto p = weak_quotient_poset(j_regions(n, {}), all);
    CHECK(is_lattice(p));
  }
}

TEST_CASE("parsing and formatting") {
  auto w = Permutation::parse("1 7 9 10 | 2 5 | 3 | 4 6 | 8");
  CHECK(w.size() == 10);
  CHECK(j_regions(10, {1, 2, 3, 5, 8}).format(w) == "1 7 9 10 | 2 5 | 3 | 4 6 | 8");
  CHECK(j_regions(4, {2}).format(Permutation::parse("4231")) == "4|23|1");
  CHECK_THROWS_AS(Permutation::parse("112"), InvalidInput);
  CHECK(Permutation::parse("312").inverse() == Permutation::parse("231"));
}
