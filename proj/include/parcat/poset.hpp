#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcat/bitset.hpp"

namespace parcat {

// Finite poset stored as a Hasse diagram plus cached strict up/down sets.
class FinitePoset {
 public:
  FinitePoset() = default;

  // Builds from a cover-like edge list; redundant edges are dropped. Throws on cycles.
  static FinitePoset from_covers(int size, const std::vector<std::pair<int, int>>& edges,
                                 std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& lower_covers(int i) const { return down_[static_cast<std::size_t>(i)]; }

  bool leq(int a, int b) const { return a == b || above_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
  bool less(int a, int b) const { return above_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
  // Strict.
  const Bitset& above(int a) const { return above_[static_cast<std::size_t>(a)]; }
  const Bitset& below(int a) const { return below_[static_cast<std::size_t>(a)]; }
  Bitset down_set(int a) const;  // reflexive
  Bitset up_set(int a) const;    // reflexive

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  // Topological order (bottom first), deterministic.
  std::vector<int> linear_extension() const;

  FinitePoset dual() const;
  FinitePoset induced(const std::vector<int>& subset) const;
  int index_of(const std::string& label) const;  // -1 if absent

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<Bitset> above_, below_;
};

// Raised when a relation fails the partial-order axioms.
class PosetAxiomError : public std::runtime_error {
 public:
  PosetAxiomError(const std::string& what, int a, int b, int c = -1)
      : std::runtime_error(what), a(a), b(b), c(c) {}
  int a, b, c;
};

FinitePoset from_relation(int size, const std::function<bool(int, int)>& leq,
                          std::vector<std::string> labels = {});

struct LatticeReport {
  bool is_lattice = true;
  // Failing pair and its maximal lower bounds (or minimal upper bounds).
  std::optional<std::pair<int, int>> witness;
  bool meet_failed = false;
  std::vector<int> bounds;
};

LatticeReport check_lattice(const FinitePoset& p);
bool is_lattice(const FinitePoset& p);
// Throw when no unique bound exists.
int meet(const FinitePoset& p, int a, int b);
int join(const FinitePoset& p, int a, int b);

std::uint64_t count_ideals(const FinitePoset& p);
// All down-closed subsets; exponential, for small posets only.
std::vector<Bitset> enumerate_ideals(const FinitePoset& p, std::size_t limit = 1u << 22);

class CongruenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classes must partition the ground set into intervals with order-preserving projections.
FinitePoset quotient(const FinitePoset& p, const std::vector<std::vector<int>>& classes,
                     std::vector<std::string> labels = {});

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q);

// Nodes labeled by the caller, edges are covers drawn bottom to top.
std::string to_dot(const FinitePoset& p, const std::string& name = "poset",
                   const std::vector<std::string>& node_attrs = {});
std::string to_cover_list(const FinitePoset& p);
FinitePoset parse_cover_list(const std::string& text);

FinitePoset chain_poset(int k);
FinitePoset antichain_poset(int k);

}  // namespace parcat
