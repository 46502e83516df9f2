#pragma once

#include <string>
#include <vector>

#include "parcat/perm.hpp"
#include "parcat/poset.hpp"

namespace parcat {

bool has_j231_pattern(const Permutation& w, const JContext& ctx);
bool has_j132_pattern(const Permutation& w, const JContext& ctx);
bool is_j_compressed(const Permutation& w, const JContext& ctx);

// Largest (J,231)-avoiding element below w / smallest (J,132)-avoiding element above w.
Permutation pi_down(const Permutation& w, const JContext& ctx);
Permutation pi_up(const Permutation& w, const JContext& ctx);

struct TamariLattice {
  JContext ctx;
  std::vector<Permutation> elements;  // lexicographic
  FinitePoset poset;                  // labels are formatted one-line words
};

std::vector<Permutation> avoiding_elements(const JContext& ctx);
std::vector<Permutation> avoiding_elements_serial(const JContext& ctx);
TamariLattice tamari_lattice(const JContext& ctx);
// Left weak order on the quotient.
FinitePoset weak_quotient_poset(const JContext& ctx, const std::vector<Permutation>& elements);

Permutation tamari_meet(const Permutation& u, const Permutation& v, const JContext& ctx);
Permutation tamari_join(const Permutation& u, const Permutation& v, const JContext& ctx);

struct CongruenceClass {
  Permutation bottom;
  Permutation top;
  std::vector<Permutation> members;  // lexicographic
};

std::vector<CongruenceClass> congruence_classes(const JContext& ctx);

struct QuotientReport {
  bool is_lattice = false;
  bool classes_are_intervals = false;
  bool projections_order_preserving = false;
  bool quotient_isomorphic = false;
  std::size_t quotient_size = 0;
  std::size_t tamari_size = 0;
  std::size_t class_count = 0;
  std::vector<std::string> failures;
  bool passed() const {
    return is_lattice && classes_are_intervals && projections_order_preserving && quotient_isomorphic;
  }
};

QuotientReport verify_quotient(const JContext& ctx);

}  // namespace parcat
