#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "parcat/coxeter.hpp"
#include "parcat/perm.hpp"
#include "parcat/poset.hpp"

namespace parcat {

struct SubwordComplexSpec {
  CoxeterSystem sys;
  Word q;
  GroupElement target;
};

struct Facet {
  std::vector<int> positions;  // 1-based, ascending; the complement of the witness
  Word witness;                // letters of q outside the facet, in order
};

// Reduced occurrences of the target in q, reported as complements, ordered by positions.
std::vector<Facet> facets(const SubwordComplexSpec& spec);
std::uint64_t facet_count(const SubwordComplexSpec& spec);

// Q = c w_0(c), target w_0^J.
SubwordComplexSpec cluster_complex(const CoxeterSystem& sys, const std::vector<int>& j_set, const Word& c_word);

struct Flip {
  int out;  // position leaving the facet
  int in;   // position entering
  int target;  // index of the new facet
};

// Neighbours of facets[f] differing by one exchange, with out < in.
std::vector<Flip> flips(const std::vector<Facet>& all, int f);
// All directed flips (from, to) over the facet list.
std::vector<std::pair<int, int>> flip_graph(const std::vector<Facet>& all);
std::vector<std::pair<int, int>> flip_graph_serial(const std::vector<Facet>& all);
FinitePoset flip_poset(const std::vector<Facet>& all);
bool flip_graph_connected(const std::vector<Facet>& all);

// w(lambda) = prod_i prod_{j = n+1-i-li}^{n-i} s_j as a permutation of [n].
Permutation w_from_shape(const std::vector<int>& shape, int n);

}  // namespace parcat
