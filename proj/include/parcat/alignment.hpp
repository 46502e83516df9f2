#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parcat/bitset.hpp"
#include "parcat/coxeter.hpp"
#include "parcat/poset.hpp"

namespace parcat {

// Which solutions of gamma = a*alpha + b*beta count as decompositions.
enum class DecompositionRule { Positive, Integers };
DecompositionRule parse_decomposition_rule(const std::string& text);

struct Decomposition {
  int alpha;  // index in the inversion order, before gamma
  int gamma;
  int beta;  // after gamma
  GoldenFraction a;
  GoldenFraction b;
};

struct AlignmentContext {
  CoxeterSystem sys;
  WeakInterval interval;
  DecompositionRule rule = DecompositionRule::Positive;
  std::vector<Decomposition> table;  // ordered by (gamma, alpha, beta)
  std::vector<Bitset> required;      // per gamma: alphas that must be inversions
  std::vector<Matrix> reflections;   // matrix of t_{r_k} for each root index

  const std::vector<Root>& roots() const { return interval.roots; }
  int size() const { return static_cast<int>(interval.elements.size()); }
};

AlignmentContext build_context(const CoxeterSystem& sys, const Word& base_word,
                               DecompositionRule rule = DecompositionRule::Positive);

// x is an index into ctx.interval.elements.
bool is_aligned(const AlignmentContext& ctx, int x);
// Throws when x is not below the base element.
bool is_aligned(const AlignmentContext& ctx, const GroupElement& x);

std::vector<int> aligned_indices(const AlignmentContext& ctx);
std::vector<int> aligned_indices_serial(const AlignmentContext& ctx);

struct AlignedSet {
  AlignmentContext ctx;
  std::vector<int> members;  // indices into ctx.interval.elements, BFS order
  FinitePoset poset() const;
};

AlignedSet aligned_set_parabolic(const CoxeterSystem& sys, const std::vector<int>& j_set, const Word& c_word,
                                 DecompositionRule rule = DecompositionRule::Positive);
AlignedSet aligned_set_general(const CoxeterSystem& sys, const Word& base_word,
                               DecompositionRule rule = DecompositionRule::Positive);

struct NoncrossingElement {
  Matrix element;
  int source;                       // aligned element index
  std::vector<int> ordered_covers;  // root indices in inversion order
};

NoncrossingElement psi(const AlignmentContext& ctx, int x);
// Distinct psi values over the aligned set, in order of first appearance.
std::vector<NoncrossingElement> noncrossing_set(const AlignedSet& set);

// Root posets. Element i is sys.positive_roots()[i] for the computed ones.
FinitePoset root_poset(const CoxeterSystem& sys);
struct RootPosetData {
  std::vector<Root> roots;
  FinitePoset poset;
};
RootPosetData builtin_root_poset(const CoxeterSystem& sys);
// Format:
//   roots: [1,0,0,0] [0,1,0,0] [1,1p,0,0] ...
//   0 < 2
//   1 < 2
// Coordinates are ring literals (1+1p is 1+phi); cover lines use 0-based root indices.
RootPosetData parse_root_poset(const CoxeterSystem& sys, const std::string& text);
std::string format_root_poset(const RootPosetData& data);
// Order filter generated by the simple roots outside J.
FinitePoset parabolic_root_filter(const RootPosetData& data, const std::vector<int>& j_set);
std::uint64_t nonnesting_count(const RootPosetData& data, const std::vector<int>& j_set);
std::uint64_t nonnesting_count(const CoxeterSystem& sys, const std::vector<int>& j_set);

}  // namespace parcat
