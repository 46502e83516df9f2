#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parcat/bitset.hpp"
#include "parcat/golden.hpp"
#include "parcat/perm.hpp"
#include "parcat/poset.hpp"

namespace parcat {

using Root = std::vector<Golden>;  // coordinates in the simple-root basis
using Word = std::vector<int>;     // 0-based generator indices

struct RootHash {
  std::size_t operator()(const Root& r) const;
};

// Square matrix acting on the simple-root basis; column j is the image of alpha_j.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  static Matrix identity(int n);

  int n() const { return n_; }
  const Golden& at(int row, int col) const { return e_[static_cast<std::size_t>(col * n_ + row)]; }
  Golden& at(int row, int col) { return e_[static_cast<std::size_t>(col * n_ + row)]; }
  Root column(int col) const;
  Root apply(const Root& v) const;
  // Image of a simple root, without allocation of the full vector.
  bool column_positive(int col) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;
  std::size_t hash() const;

 private:
  int n_ = 0;
  std::vector<Golden> e_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

enum class CoxeterType { A, B, C, D, E, F, G, H, I, AffineA, Custom };

class CoxeterSystem {
 public:
  // Finite types use generators 1..rank in names; affine A uses s0..s_rank.
  static CoxeterSystem make(CoxeterType type, int rank, int m = 0);
  static CoxeterSystem from_cartan(std::string name, std::vector<std::vector<Golden>> cartan, int name_offset,
                                   bool finite);
  // "A", "B", "D", "F", "H", "I", "affine-A" (case-insensitive).
  static CoxeterType parse_type(std::string_view text);

  const std::string& name() const { return name_; }
  CoxeterType type() const { return type_; }
  int rank() const { return rank_; }
  bool is_finite() const { return finite_; }
  // Offset added to 0-based indices when printing: s_{i+offset}.
  int name_offset() const { return name_offset_; }
  const Golden& cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  // 0 stands for infinity.
  int coxeter_m(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  bool is_crystallographic() const;
  const Matrix& simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  Root simple_root(int i) const;

  // Finite systems only.
  const std::vector<Root>& positive_roots() const;
  int root_index(const Root& r) const;

 private:
  std::string name_;
  CoxeterType type_ = CoxeterType::Custom;
  int rank_ = 0;
  int name_offset_ = 1;
  bool finite_ = true;
  std::vector<std::vector<Golden>> cartan_;
  std::vector<std::vector<int>> m_;
  std::vector<Matrix> simple_;
  std::vector<Root> positive_;
  std::unordered_map<Root, int, RootHash> root_index_;
};

bool is_positive(const Root& r);
bool is_negative(const Root& r);
Root negate(const Root& r);
std::string to_string(const Root& r);
// "[1,1+1p,0]"
Root parse_root(std::string_view text);

// Element with its exact matrix and one cached reduced word.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(Matrix m, Word reduced) : m_(std::move(m)), word_(std::move(reduced)) {}

  const Matrix& matrix() const { return m_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
  Word word_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.matrix().hash(); }
};

Matrix simple_reflection_matrix(const CoxeterSystem& sys, int i);
GroupElement identity_element(const CoxeterSystem& sys);
Matrix word_matrix(const CoxeterSystem& sys, const Word& word);
// Reduces the word by descent peeling; works in infinite systems.
GroupElement element_from_word(const CoxeterSystem& sys, const Word& word);
GroupElement element_from_matrix(const CoxeterSystem& sys, const Matrix& m);
GroupElement multiply(const CoxeterSystem& sys, const GroupElement& u, const GroupElement& v);
GroupElement inverse(const CoxeterSystem& sys, const GroupElement& w);
// w * s_i, with the cached word extended or shortened.
GroupElement times_simple(const CoxeterSystem& sys, const GroupElement& w, int i);

bool is_reduced(const CoxeterSystem& sys, const Word& word);
std::vector<int> right_descents(const CoxeterSystem& sys, const GroupElement& w);
std::vector<int> left_descents(const CoxeterSystem& sys, const GroupElement& w);

// Roots r_i = a_1...a_{i-1}(alpha_{a_i}); throws on non-reduced words.
std::vector<Root> inversion_sequence(const CoxeterSystem& sys, const Word& word);
std::vector<Root> left_inversion_set(const CoxeterSystem& sys, const GroupElement& w);
// Roots of w s w^{-1} for right descents s.
std::vector<Root> cover_reflections(const CoxeterSystem& sys, const GroupElement& w);
// u <= v in right weak order.
bool weak_leq(const CoxeterSystem& sys, const GroupElement& u, const GroupElement& v);

Word c_sorting_word(const CoxeterSystem& sys, const GroupElement& w, const Word& c_word);
GroupElement longest_element(const CoxeterSystem& sys);
// Minimal representative of the coset W_J w (left descents in J stripped).
GroupElement quotient_min_rep(const CoxeterSystem& sys, const GroupElement& w, const std::vector<int>& j_set);
// w_0^J: minimal representative of the coset of the longest element.
GroupElement quotient_longest_element(const CoxeterSystem& sys, const std::vector<int>& j_set);

// The lower interval [e, w] in right weak order with inversion bookkeeping.
struct WeakInterval {
  GroupElement top;
  Word base_word;                  // reduced word of top fixing the root order
  std::vector<Root> roots;         // inversion sequence of base_word
  std::unordered_map<Root, int, RootHash> root_index;
  std::vector<GroupElement> elements;  // BFS order, elements[0] = e
  std::vector<Bitset> inversions;      // indices into roots
  std::vector<std::vector<int>> covers;  // cover reflections as root indices
  std::vector<std::pair<int, int>> edges;  // x -> x s
  std::unordered_map<Bitset, int, BitsetHash> by_inversions;

  int index_of(const Bitset& inv) const;
};

WeakInterval enumerate_weak_interval(const CoxeterSystem& sys, const Word& reduced_word);
std::vector<GroupElement> enumerate_parabolic_quotient(const CoxeterSystem& sys, const std::vector<int>& j_set);
FinitePoset interval_poset(const CoxeterSystem& sys, const WeakInterval& iv, const std::vector<int>& subset);

// gamma = a*alpha + b*beta with a, b > 0; throws when alpha, beta are dependent.
std::optional<std::pair<GoldenFraction, GoldenFraction>> solve_two_root_combination(const Root& gamma,
                                                                                   const Root& alpha,
                                                                                   const Root& beta);

// Each generator exactly once.
bool is_coxeter_word(const CoxeterSystem& sys, const Word& c_word);
// One word per distinct Coxeter element, words are permutations of the generators.
std::vector<Word> coxeter_elements(const CoxeterSystem& sys);
bool is_fully_commutative(const CoxeterSystem& sys, const Word& reduced_word);

// "s1 s2 s1", "s1,s2", "1 2 1", "s1s2". Names are shifted by the system's
// offset unless one is given explicitly.
Word parse_word(const CoxeterSystem& sys, std::string_view text, int offset = -1);
std::string format_word(const CoxeterSystem& sys, const Word& word);

// Type A_{n-1} element as a permutation: letters act on positions from the right.
Permutation to_permutation(const CoxeterSystem& sys, const GroupElement& w);
GroupElement from_permutation(const CoxeterSystem& sys, const Permutation& p);

}  // namespace parcat
