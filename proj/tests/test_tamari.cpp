#include "doctest.h"
#include "oracles.hpp"
#include "parcat/errors.hpp"
#include "parcat/tamari.hpp"

using namespace parcat;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("pattern detection on the small example") {
  auto c = j_regions(4, {2});
  CHECK_FALSE(has_j231_pattern(P("4|23|1"), c));
  CHECK(has_j231_pattern(P("3|14|2"), c));
  CHECK_FALSE(has_j231_pattern(Permutation::identity(4), c));
  CHECK(is_j_compressed(Permutation::identity(4), c));
  CHECK_FALSE(is_j_compressed(P("3|14|2"), c));
  CHECK(is_j_compressed(P("4|23|1"), c));
  CHECK_FALSE(has_j132_pattern(Permutation::identity(4), c));
  CHECK_FALSE(has_j132_pattern(P("3|14|2"), c));
  CHECK(has_j132_pattern(P("1|34|2"), c));
  CHECK_THROWS_AS(has_j231_pattern(P("1|32|4"), c), InvalidInput);
  CHECK_THROWS_AS(pi_down(P("1|32|4"), c), InvalidInput);
}

TEST_CASE("projections on the small example") {
  auto c = j_regions(4, {2});
  CHECK(pi_down(P("3|14|2"), c) == P("2|14|3"));
  CHECK(pi_down(P("2|34|1"), c) == P("1|34|2"));
  CHECK(pi_down(P("4|23|1"), c) == P("4|23|1"));
  CHECK(pi_up(P("2|14|3"), c) == P("3|14|2"));
  CHECK(pi_up(quotient_longest(c), c) == quotient_longest(c));
  CHECK_FALSE(has_j132_pattern(quotient_longest(c), c));
}

TEST_CASE("lattice sizes") {
  CHECK(tamari_lattice(j_regions(4, {2})).elements.size() == 10);
  CHECK(tamari_lattice(j_regions(4, {})).elements.size() == 14);
  CHECK(tamari_lattice(j_regions(3, {1, 2})).elements.size() == 1);
  for (int n = 1; n <= 7; ++n) CHECK(tamari_lattice(j_regions(n, {})).elements.size() == oracle::catalan(n));
}

TEST_CASE("meet is not the weak meet") {
  auto c = j_regions(4, {2});
  auto u = P("4|13|2"), v = P("3|24|1");
  CHECK(weak_meet(u, v) == P("3|14|2"));
  CHECK(tamari_meet(u, v, c) == P("2|14|3"));
  CHECK(tamari_meet(u, u, c) == u);
  CHECK(tamari_meet(u, Permutation::identity(4), c) == Permutation::identity(4));
  CHECK_THROWS_AS(tamari_meet(P("3|14|2"), u, c), InvalidInput);
}

TEST_CASE("tamari meet and join agree with the lattice") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto ctx = j_regions(n, j);
      auto t = tamari_lattice(ctx);
      const int m = t.poset.size();
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          auto ea = t.elements[static_cast<std::size_t>(a)], eb = t.elements[static_cast<std::size_t>(b)];
          CHECK(tamari_meet(ea, eb, ctx) == t.elements[static_cast<std::size_t>(meet(t.poset, a, b))]);
          CHECK(tamari_join(ea, eb, ctx) == t.elements[static_cast<std::size_t>(join(t.poset, a, b))]);
        }
    }
}

TEST_CASE("congruence classes on the small example") {
  auto c = j_regions(4, {2});
  auto classes = congruence_classes(c);
  CHECK(classes.size() == 10);
  bool found = false;
  for (const auto& k : classes)
    if (k.bottom == P("2|14|3")) {
      found = true;
      CHECK(k.members == std::vector<Permutation>{P("2|14|3"), P("3|14|2")});
      CHECK(k.top == P("3|14|2"));
    }
  CHECK(found);
}

TEST_CASE("pattern tests agree with brute force and compression, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto ctx = j_regions(n, j);
      for (const auto& w : enumerate_quotient(ctx)) {
        bool p231 = has_j231_pattern(w, ctx);
        CHECK(p231 == oracle::brute_j231(w, ctx));
        CHECK(p231 == !is_j_compressed(w, ctx));
        CHECK(has_j132_pattern(w, ctx) == oracle::brute_j132(w, ctx));
      }
    }
}

TEST_CASE("empty J reduces to classical 231 avoidance") {
  for (int n = 1; n <= 7; ++n) {
    auto ctx = j_regions(n, {});
    for (const auto& w : oracle::all_permutations(n)) CHECK(has_j231_pattern(w, ctx) == oracle::classical_231(w));
  }
}

TEST_CASE("projections match the brute-force extrema, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto ctx = j_regions(n, j);
      for (const auto& w : enumerate_quotient(ctx)) {
        auto d = pi_down(w, ctx), u = pi_up(w, ctx);
        REQUIRE(oracle::brute_pi_down(w, ctx).has_value());
        CHECK(d == *oracle::brute_pi_down(w, ctx));
        CHECK(u == *oracle::brute_pi_up(w, ctx));
        CHECK(pi_down(d, ctx) == d);
        CHECK(pi_up(u, ctx) == u);
        CHECK(weak_leq(d, w));
        CHECK(weak_leq(w, u));
      }
    }
}

TEST_CASE("projections are monotone, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto ctx = j_regions(n, j);
      auto q = enumerate_quotient(ctx);
      for (const auto& a : q)
        for (const auto& b : q)
          if (weak_leq(a, b)) {
            CHECK(weak_leq(pi_down(a, ctx), pi_down(b, ctx)));
            CHECK(weak_leq(pi_up(a, ctx), pi_up(b, ctx)));
          }
    }
}

TEST_CASE("parallel and serial enumeration agree") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto ctx = j_regions(n, j);
      CHECK(avoiding_elements(ctx) == avoiding_elements_serial(ctx));
    }
}

TEST_CASE("quotient verification, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto r = verify_quotient(j_regions(n, j));
      CHECK(r.passed());
      CHECK(r.class_count == r.tamari_size);
    }
}

TEST_CASE("tamari lattices are lattices, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& j : all_j_subsets(n)) {
      auto t = tamari_lattice(j_regions(n, j));
      CHECK(is_lattice(t.poset));
    }
}
