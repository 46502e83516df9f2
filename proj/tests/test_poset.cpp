#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "parcat/poset.hpp"

using namespace parcat;

namespace {

FinitePoset random_poset(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  return FinitePoset::from_covers(n, e);
}

}  // namespace

TEST_CASE("from_relation builds Hasse diagrams") {
  auto chain = from_relation(3, [](int a, int b) { return a <= b; });
  CHECK(chain.covers().size() == 2);
  auto anti = from_relation(3, [](int a, int b) { return a == b; });
  CHECK(anti.covers().empty());
  // Weak(S_3) by inversion containment: hexagon
  auto perms = oracle::all_permutations(3);
  auto hex = from_relation(6, [&](int a, int b) { return weak_leq(perms[static_cast<std::size_t>(a)], perms[static_cast<std::size_t>(b)]); });
  CHECK(hex.covers().size() == 6);
  CHECK_THROWS_AS(from_relation(2, [](int, int) { return true; }), PosetAxiomError);
  CHECK_THROWS_AS(from_relation(3, [](int a, int b) { return a == b || (a == 0 && b == 1) || (a == 1 && b == 2); }), PosetAxiomError);
}

TEST_CASE("covers round trip through the order closure") {
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    auto p = random_poset(rng, 12, 0.25);
    auto q = from_relation(p.size(), [&](int a, int b) { return p.leq(a, b); });
    CHECK(q.covers() == p.covers());
  }
}

TEST_CASE("lattice test matches the brute-force bound search") {
  std::mt19937 rng(11);
  int lattices = 0;
  for (int t = 0; t < 200; ++t) {
    auto p = random_poset(rng, 2 + t % 9, 0.35);
    bool expect = oracle::brute_is_lattice(p);
    CHECK(is_lattice(p) == expect);
    lattices += expect;
  }
  CHECK(lattices > 0);
  CHECK(is_lattice(chain_poset(1)));
  auto r = check_lattice(antichain_poset(2));
  CHECK_FALSE(r.is_lattice);
  CHECK(r.meet_failed);
  CHECK(r.bounds.empty());
}

TEST_CASE("meet and join") {
  auto c = chain_poset(4);
  CHECK(meet(c, 1, 1) == 1);
  CHECK(meet(c, 1, 3) == 1);
  CHECK(join(c, 1, 3) == 3);
  CHECK_THROWS(meet(antichain_poset(2), 0, 1));
}

TEST_CASE("ideal counting") {
  CHECK(count_ideals(antichain_poset(0)) == 1);
  for (int k = 0; k <= 10; ++k) CHECK(count_ideals(chain_poset(k)) == static_cast<std::uint64_t>(k + 1));
  CHECK(count_ideals(antichain_poset(10)) == 1024);
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    auto p = random_poset(rng, 1 + t % 14, 0.2);
    auto c = count_ideals(p);
    CHECK(c == oracle::brute_count_ideals(p));
    CHECK(c == count_ideals(p.dual()));
    CHECK(c == enumerate_ideals(p).size());
  }
}

TEST_CASE("quotients") {
  auto c = chain_poset(4);
  auto same = quotient(c, {{0}, {1}, {2}, {3}});
  CHECK(is_isomorphic(same, c));
  auto one = quotient(c, {{0, 1, 2, 3}});
  CHECK(one.size() == 1);
  CHECK_THROWS_AS(quotient(c, {{0, 2}, {1}, {3}}), CongruenceError);
  // bottom class {0,1}, top {2,3}: a 2-chain
  CHECK(is_isomorphic(quotient(c, {{0, 1}, {2, 3}}), chain_poset(2)));
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(chain_poset(3), chain_poset(3)));
  CHECK_FALSE(is_isomorphic(chain_poset(3), antichain_poset(3)));
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    auto p = random_poset(rng, 10, 0.3);
    std::vector<int> perm(10);
    for (int i = 0; i < 10; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : p.covers()) e.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    auto q = FinitePoset::from_covers(10, e);
    CHECK(is_isomorphic(p, q));
    CHECK(is_isomorphic(p.dual().dual(), q));
  }
  // same degree data, different shape: N poset vs 2+2
  auto n_shape = FinitePoset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}});
  auto two_two = FinitePoset::from_covers(4, {{0, 2}, {1, 3}});
  CHECK_FALSE(is_isomorphic(n_shape, two_two));
}

TEST_CASE("text formats") {
  auto p = FinitePoset::from_covers(3, {{0, 1}}, {"a", "b", "c"});
  auto text = to_cover_list(p);
  CHECK(text == "a<b\nc\n");
  auto q = parse_cover_list(text);
  CHECK(is_isomorphic(p, q));
  auto dot = to_dot(p, "x");
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
}
