#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "doctest.h"
#include "parcat/coxeter.hpp"
#include "parcat/errors.hpp"
#include "parcat/perm.hpp"

using namespace parcat;

namespace {

// Positive roots beta with w^{-1}(beta) negative, straight from the matrices.
std::set<Root> brute_left_inversions(const CoxeterSystem& sys, const GroupElement& w) {
  const Matrix winv = inverse(sys, w).matrix();
  std::set<Root> out;
  for (const auto& r : sys.positive_roots())
    if (is_negative(winv.apply(r))) out.insert(r);
  return out;
}

Word random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(0, rank - 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(d(rng));
  return w;
}

// Leftmost occurrence of a reduced word of w inside c c c ..., by exhaustive search.
Word brute_sorting_word(const CoxeterSystem& sys, const GroupElement& w, const Word& c) {
  const int len = w.length();
  Word rep;
  for (int k = 0; k <= len; ++k) rep.insert(rep.end(), c.begin(), c.end());
  const int total = static_cast<int>(rep.size());
  std::vector<int> pos;
  std::optional<std::vector<int>> best;
  auto dfs = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pos.size()) == len) {
      Word cand;
      for (int p : pos) cand.push_back(rep[static_cast<std::size_t>(p)]);
      if (word_matrix(sys, cand) == w.matrix() && (!best || pos < *best)) best = pos;
      return;
    }
    for (int p = start; p < total; ++p) {
      pos.push_back(p);
      self(self, p + 1);
      pos.pop_back();
    }
  };
  dfs(dfs, 0);
  Word out;
  for (int p : *best) out.push_back(rep[static_cast<std::size_t>(p)]);
  return out;
}

std::size_t group_order(const CoxeterSystem& sys) { return enumerate_parabolic_quotient(sys, {}).size(); }

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(CoxeterSystem::make(CoxeterType::A, 4).positive_roots().size() == 10);
  CHECK(CoxeterSystem::make(CoxeterType::B, 4).positive_roots().size() == 16);
  CHECK(CoxeterSystem::make(CoxeterType::D, 4).positive_roots().size() == 12);
  CHECK(CoxeterSystem::make(CoxeterType::F, 4).positive_roots().size() == 24);
  CHECK(CoxeterSystem::make(CoxeterType::E, 6).positive_roots().size() == 36);
  CHECK(CoxeterSystem::make(CoxeterType::H, 3).positive_roots().size() == 15);
  CHECK(CoxeterSystem::make(CoxeterType::H, 4).positive_roots().size() == 60);
  CHECK(CoxeterSystem::make(CoxeterType::I, 2, 5).positive_roots().size() == 5);
}

TEST_CASE("group orders") {
  CHECK(group_order(CoxeterSystem::make(CoxeterType::A, 3)) == 24);
  CHECK(group_order(CoxeterSystem::make(CoxeterType::B, 3)) == 48);
  CHECK(group_order(CoxeterSystem::make(CoxeterType::D, 4)) == 192);
  CHECK(group_order(CoxeterSystem::make(CoxeterType::H, 3)) == 120);
  CHECK(group_order(CoxeterSystem::make(CoxeterType::I, 2, 6)) == 12);
}

TEST_CASE("Coxeter relations hold for the simple reflections") {
  for (auto sys : {CoxeterSystem::make(CoxeterType::B, 4), CoxeterSystem::make(CoxeterType::F, 4),
                   CoxeterSystem::make(CoxeterType::H, 4), CoxeterSystem::make(CoxeterType::D, 5)}) {
    const Matrix id = Matrix::identity(sys.rank());
    for (int i = 0; i < sys.rank(); ++i)
      for (int j = 0; j < sys.rank(); ++j) {
        const int m = sys.coxeter_m(i, j);
        Matrix p = id;
        const Matrix st = sys.simple(i) * sys.simple(j);
        for (int k = 0; k < m; ++k) p = p * st;
        CHECK(p == id);
        if (i != j)
          for (int k = 1; k < m; ++k) {
            Matrix q = id;
            for (int t = 0; t < k; ++t) q = q * st;
            CHECK_FALSE(q == id);
          }
      }
  }
}

TEST_CASE("longest element has every positive root as an inversion") {
  for (auto sys : {CoxeterSystem::make(CoxeterType::A, 4), CoxeterSystem::make(CoxeterType::B, 3),
                   CoxeterSystem::make(CoxeterType::H, 3), CoxeterSystem::make(CoxeterType::F, 4)}) {
    const auto w0 = longest_element(sys);
    CHECK(w0.length() == static_cast<int>(sys.positive_roots().size()));
    CHECK(left_descents(sys, w0).size() == static_cast<std::size_t>(sys.rank()));
  }
}

TEST_CASE("inversion sequence agrees with the left inversion set on random words") {
  std::mt19937 rng(12345);
  const std::vector<CoxeterSystem> systems{CoxeterSystem::make(CoxeterType::A, 4), CoxeterSystem::make(CoxeterType::B, 3),
                                           CoxeterSystem::make(CoxeterType::D, 4), CoxeterSystem::make(CoxeterType::H, 3)};
  int reduced_seen = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& sys = systems[static_cast<std::size_t>(trial % 4)];
    const Word w = random_word(rng, sys.rank(), 1 + trial % 12);
    const auto x = element_from_word(sys, w);
    CHECK(word_matrix(sys, x.word()) == word_matrix(sys, w));
    const auto brute = brute_left_inversions(sys, x);
    const auto inv = left_inversion_set(sys, x);
    CHECK(std::set<Root>(inv.begin(), inv.end()) == brute);
    CHECK(inv.size() == static_cast<std::size_t>(x.length()));
    if (is_reduced(sys, w)) {
      ++reduced_seen;
      const auto seq = inversion_sequence(sys, w);
      CHECK(std::set<Root>(seq.begin(), seq.end()) == brute);
    } else {
      CHECK_THROWS_AS(inversion_sequence(sys, w), InvalidInput);
    }
  }
  CHECK(reduced_seen > 1000);
}

TEST_CASE("cover reflections are the negated descent columns") {
  const auto sys = CoxeterSystem::make(CoxeterType::B, 3);
  for (const auto& x : enumerate_parabolic_quotient(sys, {})) {
    const auto cov = cover_reflections(sys, x);
    CHECK(cov.size() == right_descents(sys, x).size());
    const auto inv = brute_left_inversions(sys, x);
    for (const auto& r : cov) CHECK(inv.count(r) == 1);
  }
}

TEST_CASE("type A elements match permutations") {
  const auto sys = CoxeterSystem::make(CoxeterType::A, 3);
  for (const auto& x : enumerate_parabolic_quotient(sys, {})) {
    const auto p = to_permutation(sys, x);
    CHECK(from_permutation(sys, p) == x);
    CHECK(static_cast<int>(inversion_set(p).size()) == x.length());
  }
  for (const auto& j : all_j_subsets(5)) {
    const auto sys4 = CoxeterSystem::make(CoxeterType::A, 4);
    std::vector<int> j0;
    for (int s : j) j0.push_back(s - 1);
    const auto top = quotient_longest_element(sys4, j0);
    CHECK(to_permutation(sys4, top).inverse() == quotient_longest(JContext(5, j)));
    CHECK(enumerate_parabolic_quotient(sys4, j0).size() == quotient_size(JContext(5, j)));
  }
}

TEST_CASE("weak order on elements") {
  const auto sys = CoxeterSystem::make(CoxeterType::A, 3);
  const auto e = identity_element(sys);
  const auto w0 = longest_element(sys);
  for (const auto& x : enumerate_parabolic_quotient(sys, {})) {
    CHECK(weak_leq(sys, e, x));
    CHECK(weak_leq(sys, x, w0));
  }
  CHECK_FALSE(weak_leq(sys, element_from_word(sys, {0}), element_from_word(sys, {1})));
  CHECK(weak_leq(sys, element_from_word(sys, {0}), element_from_word(sys, {0, 1})));
  CHECK_FALSE(weak_leq(sys, element_from_word(sys, {1}), element_from_word(sys, {0, 1})));
}

TEST_CASE("c-sorting words are the leftmost reduced subwords of c^infinity") {
  for (auto sys : {CoxeterSystem::make(CoxeterType::A, 3), CoxeterSystem::make(CoxeterType::B, 3)}) {
    for (const Word& c : coxeter_elements(sys))
      for (const auto& x : enumerate_parabolic_quotient(sys, {})) {
        const Word w = c_sorting_word(sys, x, c);
        CHECK(is_reduced(sys, w));
        CHECK(word_matrix(sys, w) == x.matrix());
        if (x.length() <= 5) CHECK(w == brute_sorting_word(sys, x, c));
      }
  }
}

TEST_CASE("Coxeter elements") {
  CHECK(coxeter_elements(CoxeterSystem::make(CoxeterType::A, 4)).size() == 8);
  CHECK(coxeter_elements(CoxeterSystem::make(CoxeterType::D, 4)).size() == 8);
  CHECK(coxeter_elements(CoxeterSystem::make(CoxeterType::H, 3)).size() == 4);
  const auto a3 = CoxeterSystem::make(CoxeterType::A, 3);
  CHECK(is_coxeter_word(a3, {2, 0, 1}));
  CHECK_FALSE(is_coxeter_word(a3, {0, 0, 1}));
  CHECK_FALSE(is_coxeter_word(a3, {0, 1}));
}

TEST_CASE("quotient representatives") {
  const auto sys = CoxeterSystem::make(CoxeterType::H, 3);
  const auto w0 = longest_element(sys);
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> j;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) j.push_back(i);
    const auto top = quotient_min_rep(sys, w0, j);
    const auto ld = left_descents(sys, top);
    for (int s : j) CHECK(std::find(ld.begin(), ld.end(), s) == ld.end());
    CHECK(top == quotient_longest_element(sys, j));
  }
  CHECK(quotient_longest_element(sys, {0, 1, 2}).length() == 0);
}

TEST_CASE("two-root combinations") {
  const auto sys = CoxeterSystem::make(CoxeterType::B, 2);
  const Root a1 = sys.simple_root(0), a2 = sys.simple_root(1);
  // B2: alpha1 + alpha2 and alpha1 + 2 alpha2 (or the transposed lengths)
  for (const auto& r : sys.positive_roots()) {
    if (r == a1 || r == a2) continue;
    const auto sol = solve_two_root_combination(r, a1, a2);
    REQUIRE(sol);
    CHECK(sol->first.sign() > 0);
    CHECK(sol->second.sign() > 0);
  }
  CHECK_FALSE(solve_two_root_combination(a1, a1, a2));
  CHECK_THROWS_AS(solve_two_root_combination(a1, a1, a1), InvalidInput);
  const auto h = CoxeterSystem::make(CoxeterType::H, 3);
  const Root phi_root{Golden(1), Golden::phi(), Golden(0)};
  const auto sol = solve_two_root_combination(phi_root, h.simple_root(0), h.simple_root(1));
  REQUIRE(sol);
  CHECK(sol->second == GoldenFraction(Golden::phi()));
}

TEST_CASE("fully commutative elements") {
  const auto sys = CoxeterSystem::make(CoxeterType::A, 3);
  CHECK(is_fully_commutative(sys, {0, 2, 1}));
  CHECK_FALSE(is_fully_commutative(sys, {0, 1, 0}));
  // w_0^J for a maximal parabolic of type A is fully commutative
  CHECK(is_fully_commutative(sys, quotient_longest_element(sys, {0, 2}).word()));
}

TEST_CASE("word syntax") {
  const auto sys = CoxeterSystem::make(CoxeterType::A, 4);
  CHECK(parse_word(sys, "s1 s2 s1") == Word{0, 1, 0});
  CHECK(parse_word(sys, "s1s2") == Word{0, 1});
  CHECK(parse_word(sys, "1,3") == Word{0, 2});
  CHECK(parse_word(sys, "e").empty());
  CHECK(parse_word(sys, "s0 s1", 0) == Word{0, 1});
  CHECK(format_word(sys, {0, 3}) == "s1 s4");
  CHECK_THROWS_AS(parse_word(sys, "s5"), InvalidInput);
  CHECK_THROWS_AS(parse_word(sys, "x"), InvalidInput);
  const auto aff = CoxeterSystem::make(CoxeterType::AffineA, 3);
  CHECK(aff.rank() == 4);
  CHECK(parse_word(aff, "s0 s3") == Word{0, 3});
  CHECK_FALSE(aff.is_finite());
  CHECK(CoxeterSystem::parse_type("affine-A") == CoxeterType::AffineA);
  CHECK(CoxeterSystem::parse_type("h") == CoxeterType::H);
  CHECK_THROWS_AS(CoxeterSystem::parse_type("Q"), InvalidInput);
}

TEST_CASE("root text round trip") {
  const auto sys = CoxeterSystem::make(CoxeterType::H, 3);
  for (const auto& r : sys.positive_roots()) CHECK(parse_root(to_string(r)) == r);
}

TEST_CASE("affine words reduce by descent peeling") {
  const auto aff = CoxeterSystem::make(CoxeterType::AffineA, 3);
  const Word w = parse_word(aff, "s0 s1 s0 s3 s0 s1 s2");
  CHECK(is_reduced(aff, w));
  CHECK_FALSE(is_reduced(aff, parse_word(aff, "s0 s1 s0 s1 s0 s1")));
  CHECK(element_from_word(aff, parse_word(aff, "s0 s1 s0 s1")).length() == 2);
}
