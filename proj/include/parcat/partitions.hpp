#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "parcat/perm.hpp"
#include "parcat/poset.hpp"

namespace parcat {

// Canonical set partition: parts sorted by minimum, each part ascending.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> parts);
  static SetPartition singletons(int n);
  // Partition generated by joining each bump's endpoints.
  static SetPartition from_bumps(int n, const std::vector<PosPair>& bumps);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  int part_of(int x) const { return part_of_[static_cast<std::size_t>(x - 1)]; }

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.n_ == b.n_ && a.parts_ == b.parts_; }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.parts_ < b.parts_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> parts_;
  std::vector<int> part_of_;
};

std::string to_string(const SetPartition& p);
std::vector<PosPair> bumps(const SetPartition& p);
// All set partitions of [n] in restricted-growth order.
std::vector<SetPartition> all_set_partitions(int n);

bool is_j_noncrossing(const SetPartition& p, const JContext& ctx);
bool is_j_nonnesting(const SetPartition& p, const JContext& ctx);
std::vector<SetPartition> noncrossing_partitions(const JContext& ctx);
std::vector<SetPartition> nonnesting_partitions(const JContext& ctx);

SetPartition perm_to_nc(const Permutation& w, const JContext& ctx);
// Order on parts (indices into p.parts()).
FinitePoset bump_poset(const SetPartition& p, const JContext& ctx);
Permutation nc_to_perm(const SetPartition& p, const JContext& ctx);

// Transpositions (i,j) with i,j in different regions, ordered lexicographically.
std::vector<PosPair> parabolic_roots_A(const JContext& ctx);
// (i1,i2) <= (j1,j2) iff i1 >= j1 and i2 <= j2; labels "(i,j)".
FinitePoset parabolic_root_poset_A(const JContext& ctx);

using RootIdeal = std::vector<PosPair>;  // sorted pairs of a down-closed subset
bool is_root_ideal(const RootIdeal& ideal, const JContext& ctx);
SetPartition ideal_to_nn(const RootIdeal& ideal, const JContext& ctx);
RootIdeal nn_to_ideal(const SetPartition& p, const JContext& ctx);
std::vector<RootIdeal> all_root_ideals(const JContext& ctx);

SetPartition nn_to_nc(const SetPartition& p, const JContext& ctx);
SetPartition nc_to_nn(const SetPartition& p, const JContext& ctx);

using FerrersShape = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;

FerrersShape bounding_shape(const JContext& ctx);
BigInt kreweras_count(const FerrersShape& shape);
std::string to_string(const FerrersShape& shape);

}  // namespace parcat
