#pragma once

#include <cstdint>
#include <vector>

#include "parcat/coxeter.hpp"
#include "parcat/poset.hpp"

namespace parcat {

// I2(m) for any m >= 2 without a matrix realization. s1 = F_0, s2 = F_{m-1},
// s1 s2 = rot(1); the reflection F_j has positive root j, roots ordered from alpha_1 to alpha_2.
class Dihedral {
 public:
  struct Element {
    bool flip = false;
    int k = 0;  // rot(k) or F_k, taken mod m
    friend bool operator==(const Element&, const Element&) = default;
  };

  explicit Dihedral(int m);
  int m() const { return m_; }
  int order() const { return 2 * m_; }

  Element identity() const { return {}; }
  Element generator(int i) const;  // i in {0, 1}
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element from_word(const Word& w) const;
  Element longest() const;

  int length(const Element& x) const;
  // Alternating; for the longest element the one starting with s_{first}.
  Word reduced_word(const Element& x, int first = 0) const;
  bool is_reduced(const Word& w) const { return length(from_word(w)) == static_cast<int>(w.size()); }
  // Root indices r_1, ..., r_k of a reduced word.
  std::vector<int> inversion_sequence(const Word& reduced) const;
  std::vector<int> inversion_set(const Element& x) const;
  std::vector<int> cover_reflections(const Element& x) const;
  std::vector<Element> elements() const;  // identity first, then by length

  // Left descents in J removed from the longest element.
  Element quotient_longest(const std::vector<int>& j_set) const;
  Word c_sorting_word(const Element& x, const Word& c) const;

  // Two simple roots below a chain of the remaining m - 2 roots.
  FinitePoset root_poset() const;

 private:
  int mod(int k) const { return ((k % m_) + m_) % m_; }
  int m_;
};

struct DihedralCounts {
  std::uint64_t aligned = 0;
  std::uint64_t noncrossing = 0;
  std::uint64_t subword = 0;
  std::uint64_t nonnesting = 0;
};

// c is {0,1} or {1,0}.
DihedralCounts dihedral_counts(int m, const std::vector<int>& j_set, const Word& c);
// Aligned elements of [e, w_0^J] as reduced words.
std::vector<Word> dihedral_aligned(int m, const std::vector<int>& j_set, const Word& c);

}  // namespace parcat
