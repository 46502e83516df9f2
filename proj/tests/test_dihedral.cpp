#include <set>

#include "doctest.h"
#include "parcat/alignment.hpp"
#include "parcat/dihedral.hpp"
#include "parcat/errors.hpp"
#include "parcat/subword.hpp"

using namespace parcat;

TEST_CASE("group structure") {
  for (int m = 2; m <= 12; ++m) {
    const Dihedral d(m);
    const auto els = d.elements();
    CHECK(els.size() == static_cast<std::size_t>(2 * m));
    CHECK(d.length(d.longest()) == m);
    for (int i = 0; i < 2; ++i) CHECK(d.multiply(d.generator(i), d.generator(i)) == d.identity());
    Dihedral::Element st = d.identity();
    for (int k = 0; k < m; ++k) st = d.multiply(st, d.multiply(d.generator(0), d.generator(1)));
    CHECK(st == d.identity());
    for (const auto& x : els) {
      CHECK(d.multiply(x, d.inverse(x)) == d.identity());
      CHECK(d.from_word(d.reduced_word(x)) == x);
      CHECK(static_cast<int>(d.inversion_set(x).size()) == d.length(x));
    }
  }
  CHECK_THROWS_AS(Dihedral(1), InvalidInput);
}

TEST_CASE("closed form matches the matrix engine") {
  for (int m = 2; m <= 6; ++m) {
    const auto sys = CoxeterSystem::make(CoxeterType::I, 2, m);
    const auto rp = builtin_root_poset(sys);
    for (const std::vector<int>& j : {std::vector<int>{}, {0}, {1}, {0, 1}})
      for (const Word& c : {Word{0, 1}, Word{1, 0}}) {
        const auto d = dihedral_counts(m, j, c);
        const auto al = aligned_set_parabolic(sys, j, c);
        CHECK(d.aligned == al.members.size());
        CHECK(d.noncrossing == noncrossing_set(al).size());
        CHECK(d.subword == facet_count(cluster_complex(sys, j, c)));
        CHECK(d.nonnesting == nonnesting_count(rp, j));
        std::set<Word> engine, closed;
        for (int x : al.members) engine.insert(al.ctx.interval.elements[static_cast<std::size_t>(x)].word());
        for (const auto& w : dihedral_aligned(m, j, c)) closed.insert(w);
        // both sides list reduced words; compare as elements
        std::set<std::pair<bool, int>> a, b;
        const Dihedral dd(m);
        for (const auto& w : engine) {
          const auto e = dd.from_word(w);
          a.insert({e.flip, e.k});
        }
        for (const auto& w : closed) {
          const auto e = dd.from_word(w);
          b.insert({e.flip, e.k});
        }
        CHECK(a == b);
      }
  }
}

TEST_CASE("counts for large m") {
  for (int m : {7, 8, 13, 40}) {
    for (const Word& c : {Word{0, 1}, Word{1, 0}}) {
      const auto none = dihedral_counts(m, {}, c);
      CHECK(none.aligned == static_cast<std::uint64_t>(m + 2));
      CHECK(none.noncrossing == none.aligned);
      CHECK(none.subword == none.aligned);
      CHECK(none.nonnesting == none.aligned);
      for (int s = 0; s < 2; ++s) {
        const auto one = dihedral_counts(m, {s}, c);
        CHECK(one.aligned == static_cast<std::uint64_t>(m));
        CHECK(one.noncrossing == one.aligned);
        CHECK(one.subword == one.aligned);
        CHECK(one.nonnesting == one.aligned);
      }
      const auto all = dihedral_counts(m, {0, 1}, c);
      CHECK(all.aligned == 1);
      CHECK(all.subword == 1);
      CHECK(all.nonnesting == 1);
    }
  }
}

TEST_CASE("root poset shape") {
  const Dihedral d(7);
  const auto p = d.root_poset();
  CHECK(p.minimal_elements() == std::vector<int>{0, 6});
  CHECK(p.maximal_elements().size() == 1);
  CHECK(count_ideals(p) == 9);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(dihedral_counts(5, {2}, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(dihedral_counts(5, {}, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(Dihedral(5).generator(2), InvalidInput);
  CHECK_THROWS_AS(Dihedral(5).inversion_sequence({0, 0}), InvalidInput);
}
