#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "parcat/alignment.hpp"
#include "parcat/errors.hpp"
#include "parcat/subword.hpp"

using namespace parcat;

namespace {

// Complements of reduced occurrences, by trying every position subset.
std::set<std::vector<int>> brute_facets(const SubwordComplexSpec& spec) {
  const int len = static_cast<int>(spec.q.size());
  const int keep = spec.target.length();
  std::set<std::vector<int>> out;
  std::vector<int> pick;
  auto dfs = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == keep) {
      Word w;
      for (int p : pick) w.push_back(spec.q[static_cast<std::size_t>(p)]);
      if (word_matrix(spec.sys, w) == spec.target.matrix()) {
        std::vector<int> comp;
        for (int p = 0; p < len; ++p)
          if (!std::binary_search(pick.begin(), pick.end(), p)) comp.push_back(p + 1);
        out.insert(comp);
      }
      return;
    }
    for (int p = start; p < len; ++p) {
      pick.push_back(p);
      self(self, p + 1);
      pick.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<int> zero_based(const std::vector<int>& j) {
  std::vector<int> out;
  for (int s : j) out.push_back(s - 1);
  return out;
}

}  // namespace

TEST_CASE("facets match exhaustive search") {
  for (auto sys : {CoxeterSystem::make(CoxeterType::A, 3), CoxeterSystem::make(CoxeterType::B, 3),
                   CoxeterSystem::make(CoxeterType::H, 3)}) {
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> j;
      for (int i = 0; i < 3; ++i)
        if (mask >> i & 1) j.push_back(i);
      const auto spec = cluster_complex(sys, j, coxeter_elements(sys).back());
      const auto fs = facets(spec);
      std::set<std::vector<int>> got;
      for (const auto& f : fs) got.insert(f.positions);
      CHECK(got == brute_facets(spec));
      CHECK(fs.size() == facet_count(spec));
    }
  }
}

TEST_CASE("facet witnesses are reduced words of the target") {
  for (auto sys : {CoxeterSystem::make(CoxeterType::A, 4), CoxeterSystem::make(CoxeterType::D, 4)}) {
    for (const Word& c : coxeter_elements(sys))
      for (const std::vector<int>& j : {std::vector<int>{}, {0, 1}, {1, 3}}) {
        const auto spec = cluster_complex(sys, j, c);
        for (const auto& f : facets(spec)) {
          CHECK(is_reduced(sys, f.witness));
          CHECK(word_matrix(sys, f.witness) == spec.target.matrix());
          CHECK(f.positions.size() + f.witness.size() == spec.q.size());
        }
      }
  }
}

TEST_CASE("cluster complexes for J empty have Catalan many facets") {
  CHECK(facet_count(cluster_complex(CoxeterSystem::make(CoxeterType::A, 3), {}, {0, 1, 2})) == 14);
  CHECK(facet_count(cluster_complex(CoxeterSystem::make(CoxeterType::B, 3), {}, {2, 1, 0})) == 20);
  CHECK(facet_count(cluster_complex(CoxeterSystem::make(CoxeterType::H, 3), {}, {0, 1, 2})) == 32);
  CHECK(facet_count(cluster_complex(CoxeterSystem::make(CoxeterType::D, 4), {}, {1, 0, 2, 3})) == 50);
}

TEST_CASE("D4 subword counts depend on c") {
  const auto sys = CoxeterSystem::make(CoxeterType::D, 4);
  CHECK(facet_count(cluster_complex(sys, {0, 1}, parse_word(sys, "s2 s3 s4 s1"))) == 22);
  CHECK(facet_count(cluster_complex(sys, {0, 1}, parse_word(sys, "s3 s2 s1 s4"))) == 21);
}

TEST_CASE("flips exchange one position forward") {
  const auto sys = CoxeterSystem::make(CoxeterType::A, 3);
  const auto fs = facets(cluster_complex(sys, {1}, {0, 1, 2}));
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (const auto& fl : flips(fs, f)) {
      CHECK(fl.out < fl.in);
      const auto& a = fs[static_cast<std::size_t>(f)].positions;
      const auto& b = fs[static_cast<std::size_t>(fl.target)].positions;
      CHECK(std::binary_search(a.begin(), a.end(), fl.out));
      CHECK(std::binary_search(b.begin(), b.end(), fl.in));
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      CHECK(common.size() + 1 == a.size());
    }
  CHECK(flip_graph(fs) == flip_graph_serial(fs));
  CHECK(flip_graph_connected(fs));
  CHECK_THROWS_AS(flips(fs, -1), InvalidInput);
}

TEST_CASE("flip poset is isomorphic to the aligned poset for J empty") {
  const auto sys = CoxeterSystem::make(CoxeterType::A, 3);
  for (const Word& c : coxeter_elements(sys)) {
    const auto fl = flip_poset(facets(cluster_complex(sys, {}, c)));
    const auto al = aligned_set_parabolic(sys, {}, c).poset();
    CHECK(is_isomorphic(fl, al));
  }
}

TEST_CASE("type A subword counts equal nonnesting counts") {
  for (int n = 2; n <= 6; ++n) {
    const auto sys = CoxeterSystem::make(CoxeterType::A, n - 1);
    Word c;
    for (int i = 0; i < n - 1; ++i) c.push_back(i);
    for (const auto& j : all_j_subsets(n))
      CHECK(facet_count(cluster_complex(sys, zero_based(j), c)) == nonnesting_partitions(JContext(n, j)).size());
  }
}

TEST_CASE("w(lambda) is the longest quotient element") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& j : all_j_subsets(n)) {
      const JContext ctx(n, j);
      CHECK(w_from_shape(bounding_shape(ctx), n) == quotient_longest(ctx));
    }
  CHECK(w_from_shape({}, 3) == Permutation::identity(3));
  CHECK_THROWS_AS(w_from_shape({1, 2}, 4), InvalidInput);
  CHECK_THROWS_AS(w_from_shape({4}, 4), InvalidInput);
}

TEST_CASE("subword complex argument checks") {
  const auto sys = CoxeterSystem::make(CoxeterType::A, 2);
  CHECK_THROWS_AS(cluster_complex(sys, {}, {0}), InvalidInput);
  CHECK_THROWS_AS(cluster_complex(CoxeterSystem::make(CoxeterType::AffineA, 2), {}, {0, 1, 2}), InvalidInput);
  SubwordComplexSpec short_spec{sys, {0}, longest_element(sys)};
  CHECK(facet_count(short_spec) == 0);
  CHECK(facets(short_spec).empty());
  SubwordComplexSpec bad{sys, {0, 5}, identity_element(sys)};
  CHECK_THROWS_AS(facet_count(bad), InvalidInput);
}
