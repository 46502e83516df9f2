#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parcat/bitset.hpp"

namespace parcat {

using PosPair = std::pair<int, int>;  // 1-based positions, first < second

// Immutable permutation of [n] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  // Accepts "4231", "4 2 3 1", "4|23|1", "1 7 9 10 | 2 5 | 3".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  // 1-based position.
  int operator()(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }
  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const;
  Permutation with_swapped_positions(int i, int j) const;
  // (this * o)(x) = this(o(x))
  Permutation compose(const Permutation& o) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Position-pair inversions stored by lexicographic pair rank.
class InversionSet {
 public:
  explicit InversionSet(int n = 0) : n_(n), bits_(pair_count(n)) {}

  static std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
  static std::size_t rank(int n, int i, int j);

  int n() const { return n_; }
  bool contains(int i, int j) const { return bits_.test(rank(n_, i, j)); }
  void insert(int i, int j) { bits_.set(rank(n_, i, j)); }
  std::size_t size() const { return bits_.count(); }
  bool is_subset_of(const InversionSet& o) const { return bits_.is_subset_of(o.bits_); }
  std::vector<PosPair> pairs() const;
  const Bitset& bits() const { return bits_; }

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

 private:
  int n_;
  Bitset bits_;
};

InversionSet inversion_set(const Permutation& w);
// Permutation with the given inversion set; the set must be realizable.
Permutation permutation_from_inversions(const InversionSet& inv);
bool weak_leq(const Permutation& u, const Permutation& v);
std::vector<Permutation> lower_covers(const Permutation& w);
std::vector<Permutation> upper_covers(const Permutation& w);
std::vector<PosPair> descent_pairs(const Permutation& w);
// Meet and join in the left weak order of S_n.
Permutation weak_meet(const Permutation& u, const Permutation& v);
Permutation weak_join(const Permutation& u, const Permutation& v);

// J given as indices i with s_i in J; regions split after every index outside J.
class JContext {
 public:
  JContext() = default;
  JContext(int n, std::vector<int> j_set);

  int n() const { return n_; }
  const std::vector<int>& j_set() const { return j_set_; }
  bool in_j(int i) const;
  // Regions as [first, last] position ranges, 1-based.
  const std::vector<PosPair>& regions() const { return regions_; }
  // 0-based region index of a 1-based position.
  int region_of(int pos) const { return region_of_[static_cast<std::size_t>(pos - 1)]; }
  bool same_region(int a, int b) const { return region_of(a) == region_of(b); }
  int region_count() const { return static_cast<int>(regions_.size()); }

  // Bars between regions, e.g. "4|23|1".
  std::string format(const Permutation& w) const;
  std::string describe() const;

 private:
  int n_ = 0;
  std::vector<int> j_set_;
  std::vector<PosPair> regions_;
  std::vector<int> region_of_;
};

JContext j_regions(int n, const std::vector<int>& j_set);
// Parses "1,2,3" or "" or "s1 s2"; indices 1-based.
std::vector<int> parse_j_list(std::string_view text);
// All subsets of {1..n-1}, ordered by size then lexicographically.
std::vector<std::vector<int>> all_j_subsets(int n);

bool is_quotient_member(const Permutation& w, const JContext& ctx);
std::vector<Permutation> enumerate_quotient(const JContext& ctx);
Permutation quotient_longest(const JContext& ctx);
// n! / prod(region sizes)!
unsigned long long quotient_size(const JContext& ctx);

std::string to_string(const Permutation& w);

}  // namespace parcat
