#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "parcat/errors.hpp"
#include "parcat/partitions.hpp"

using namespace parcat;

namespace {

const std::vector<int> kBigJ{1, 2, 3, 5, 8};
SetPartition fig_nc() { return SetPartition(10, {{1}, {2, 9}, {3, 10}, {4}, {5}, {6, 8}, {7}}); }
SetPartition fig_nn() { return SetPartition(10, {{1}, {2, 5, 9}, {3, 6}, {4}, {7}, {8}, {10}}); }

int part_index(const SetPartition& p, std::vector<int> part) {
  for (std::size_t i = 0; i < p.parts().size(); ++i)
    if (p.parts()[i] == part) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("bumps") {
  CHECK(bumps(SetPartition::singletons(5)).empty());
  auto b = bumps(fig_nn());
  std::set<PosPair> bs(b.begin(), b.end());
  CHECK(bs.count({2, 5}));
  CHECK(bs.count({5, 9}));
  CHECK(bs.count({3, 6}));
  CHECK(bumps(SetPartition(3, {{1, 2, 3}})) == std::vector<PosPair>{{1, 2}, {2, 3}});
  CHECK(SetPartition::from_bumps(10, {{2, 9}, {3, 10}, {6, 8}}) == fig_nc());
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), InvalidInput);
}

TEST_CASE("noncrossing and nonnesting predicates") {
  auto big = j_regions(10, kBigJ);
  CHECK(is_j_noncrossing(fig_nc(), big));
  CHECK_FALSE(is_j_noncrossing(SetPartition(4, {{1, 3}, {2, 4}}), j_regions(4, {})));
  CHECK(is_j_noncrossing(SetPartition(4, {{1, 3}, {2, 4}}), j_regions(4, {2})));
  CHECK_FALSE(is_j_nonnesting(SetPartition(4, {{1, 4}, {2, 3}}), j_regions(4, {})));
  CHECK(is_j_nonnesting(fig_nn(), big));
  CHECK(is_j_nonnesting(SetPartition::singletons(6), j_regions(6, {2, 4})));
}

TEST_CASE("empty J matches the classical definitions, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    auto ctx = j_regions(n, {});
    for (const auto& p : all_set_partitions(n)) {
      CHECK(is_j_noncrossing(p, ctx) == oracle::classical_noncrossing(p));
      CHECK(is_j_nonnesting(p, ctx) == oracle::classical_nonnesting(p));
    }
  }
}

TEST_CASE("permutation to partition") {
  auto big = j_regions(10, kBigJ);
  CHECK(perm_to_nc(Permutation::identity(5), j_regions(5, {})) == SetPartition::singletons(5));
  CHECK(perm_to_nc(Permutation::parse("4|23|1"), j_regions(4, {2})) == SetPartition(4, {{1, 3}, {2, 4}}));
  auto w = Permutation::parse("1 7 9 10 | 2 5 | 3 | 4 6 | 8");
  CHECK(bumps(perm_to_nc(w, big)) == std::vector<PosPair>{{2, 9}, {3, 10}, {6, 8}});
  CHECK(nc_to_perm(fig_nc(), big) == w);
  CHECK(nc_to_perm(SetPartition::singletons(6), j_regions(6, {1, 4})) == Permutation::identity(6));
  CHECK(nc_to_perm(SetPartition(4, {{1, 3}, {2, 4}}), j_regions(4, {2})) == Permutation::parse("4231"));
  CHECK_THROWS_AS(perm_to_nc(Permutation::parse("3|14|2"), j_regions(4, {2})), InvalidInput);
  CHECK_THROWS_AS(nc_to_perm(SetPartition(4, {{1, 3}, {2, 4}}), j_regions(4, {})), InvalidInput);
}

TEST_CASE("bump poset") {
  auto p = fig_nc();
  auto bp = bump_poset(p, j_regions(10, kBigJ));
  const int p7 = part_index(p, {7}), p68 = part_index(p, {6, 8}), p5 = part_index(p, {5});
  const int p29 = part_index(p, {2, 9}), p310 = part_index(p, {3, 10});
  CHECK(bp.less(p68, p7));
  CHECK(bp.less(p29, p5));
  CHECK(bp.less(p310, p5));
  CHECK(bp.less(p29, p68));
  CHECK(bp.less(p310, p68));
  CHECK(bump_poset(SetPartition::singletons(5), j_regions(5, {})).covers().empty());
  auto small = SetPartition(3, {{1, 3}, {2}});
  auto sp = bump_poset(small, j_regions(3, {}));
  CHECK(sp.less(part_index(small, {1, 3}), part_index(small, {2})));
}

TEST_CASE("root poset and shapes") {
  auto a2 = parabolic_root_poset_A(j_regions(3, {}));
  CHECK(a2.size() == 3);
  CHECK(a2.maximal_elements().size() == 1);
  CHECK(a2.labels()[static_cast<std::size_t>(a2.maximal_elements()[0])] == "(1,3)");
  CHECK(parabolic_root_poset_A(j_regions(10, kBigJ)).size() == 37);
  CHECK(parabolic_root_poset_A(j_regions(2, {1})).size() == 0);
  CHECK(bounding_shape(j_regions(10, kBigJ)) == FerrersShape{9, 7, 7, 6, 4, 4});
  CHECK(bounding_shape(j_regions(4, {})) == FerrersShape{3, 2, 1});
  CHECK(bounding_shape(j_regions(4, {1, 2, 3})).empty());
  CHECK(to_string(FerrersShape{9, 7, 7, 6, 4, 4}) == "(9,7,7,6,4,4)");
}

TEST_CASE("kreweras determinant") {
  CHECK(kreweras_count({2, 1}) == 5);
  CHECK(kreweras_count({}) == 1);
  CHECK(kreweras_count({3, 2, 1}) == 14);
  for (int n = 1; n <= 9; ++n) {
    FerrersShape st;
    for (int r = n - 1; r >= 1; --r) st.push_back(r);
    CHECK(kreweras_count(st) == oracle::catalan(n));
  }
  auto big = j_regions(10, kBigJ);
  CHECK(kreweras_count(bounding_shape(big)) == count_ideals(parabolic_root_poset_A(big)));
  for (const FerrersShape& s : {FerrersShape{4, 4, 2}, FerrersShape{5, 3, 3, 1}, FerrersShape{1}, FerrersShape{6, 6, 6}})
    CHECK(kreweras_count(s) == oracle::count_subshapes(s));
}

TEST_CASE("kreweras count equals the ideal count, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto ctx = j_regions(n, j);
      auto shape = bounding_shape(ctx);
      CHECK(kreweras_count(shape) == count_ideals(parabolic_root_poset_A(ctx)));
      CHECK(kreweras_count(shape) == oracle::count_subshapes(shape));
    }
}

TEST_CASE("ideals and nonnesting partitions") {
  auto big = j_regions(10, kBigJ);
  auto full = parabolic_root_poset_A(big);
  RootIdeal all;
  for (const auto& r : parabolic_roots_A(big)) all.push_back(r);
  std::sort(all.begin(), all.end());
  CHECK(ideal_to_nn(all, big) == SetPartition::singletons(10));
  auto ideal = nn_to_ideal(fig_nn(), big);
  CHECK(is_root_ideal(ideal, big));
  CHECK(ideal_to_nn(ideal, big) == fig_nn());
  // empty ideal: bumps are the minimal roots
  auto empty = ideal_to_nn({}, big);
  std::vector<PosPair> minima;
  for (int m : full.minimal_elements()) minima.push_back(parabolic_roots_A(big)[static_cast<std::size_t>(m)]);
  std::sort(minima.begin(), minima.end());
  CHECK(bumps(empty) == minima);
  CHECK_THROWS_AS(ideal_to_nn({{1, 10}}, big), InvalidInput);
}

TEST_CASE("nonnesting to noncrossing on the large example") {
  auto big = j_regions(10, kBigJ);
  CHECK(nn_to_nc(fig_nn(), big) == fig_nc());
  CHECK(nc_to_nn(fig_nc(), big) == fig_nn());
  CHECK(nn_to_nc(SetPartition::singletons(10), big) == SetPartition::singletons(10));
  CHECK(nc_to_nn(SetPartition::singletons(10), big) == SetPartition::singletons(10));
}

TEST_CASE("maximal parabolic: both families coincide") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<int> j;
      for (int i = 1; i < n; ++i)
        if (i != k) j.push_back(i);
      auto ctx = j_regions(n, j);
      CHECK(noncrossing_partitions(ctx) == nonnesting_partitions(ctx));
      std::set<SetPartition> image;
      for (const auto& p : nonnesting_partitions(ctx)) image.insert(nn_to_nc(p, ctx));
      CHECK(image.size() == nonnesting_partitions(ctx).size());
    }
}

TEST_CASE("bijections round trip, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto ctx = j_regions(n, j);
      auto av = avoiding_elements(ctx);
      auto nc = noncrossing_partitions(ctx);
      auto nn = nonnesting_partitions(ctx);
      REQUIRE(av.size() == nc.size());
      REQUIRE(nc.size() == nn.size());
      CHECK(kreweras_count(bounding_shape(ctx)) == nn.size());
      std::set<SetPartition> ncs(nc.begin(), nc.end());
      for (const auto& w : av) {
        auto p = perm_to_nc(w, ctx);
        CHECK(ncs.count(p) == 1);
        CHECK(nc_to_perm(p, ctx) == w);
      }
      std::set<SetPartition> image;
      for (const auto& p : nn) {
        auto q = nn_to_nc(p, ctx);
        CHECK(ncs.count(q) == 1);
        CHECK(nc_to_nn(q, ctx) == p);
        image.insert(q);
      }
      CHECK(image.size() == nc.size());
    }
}
