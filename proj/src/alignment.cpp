#include "parcat/alignment.hpp"

#include <algorithm>
#include <unordered_set>

#include "parcat/errors.hpp"
#include "parcat/parallel.hpp"

namespace parcat {

DecompositionRule parse_decomposition_rule(const std::string& text) {
  if (text == "positive") return DecompositionRule::Positive;
  if (text == "integers") return DecompositionRule::Integers;
  throw InvalidInput("decomposition rule must be 'positive' or 'integers'");
}

AlignmentContext build_context(const CoxeterSystem& sys, const Word& base_word, DecompositionRule rule) {
  if (!is_reduced(sys, base_word)) throw InvalidInput("base word is not reduced: " + format_word(sys, base_word));
  AlignmentContext ctx;
  ctx.sys = sys;
  ctx.rule = rule;
  ctx.interval = enumerate_weak_interval(sys, base_word);
  const auto& roots = ctx.interval.roots;
  const int k = static_cast<int>(roots.size());
  ctx.required.assign(static_cast<std::size_t>(k), Bitset(static_cast<std::size_t>(k)));
  for (int g = 1; g + 1 < k; ++g)
    for (int a = 0; a < g; ++a)
      for (int b = g + 1; b < k; ++b) {
        const auto& ra = roots[static_cast<std::size_t>(a)];
        const auto& rb = roots[static_cast<std::size_t>(b)];
        auto sol = solve_two_root_combination(roots[static_cast<std::size_t>(g)], ra, rb);
        if (!sol) continue;
        if (rule == DecompositionRule::Integers && !(sol->first.is_integer() && sol->second.is_integer())) continue;
        ctx.table.push_back({a, g, b, sol->first, sol->second});
        ctx.required[static_cast<std::size_t>(g)].set(static_cast<std::size_t>(a));
      }
  // t_k = P_k P_{k-1}^{-1} with P_k the prefix product
  Matrix prefix = Matrix::identity(sys.rank());
  Word pre;
  for (int m = 0; m < k; ++m) {
    Word rev(pre.rbegin(), pre.rend());
    Matrix inv = word_matrix(sys, rev);
    pre.push_back(base_word[static_cast<std::size_t>(m)]);
    Matrix next = word_matrix(sys, pre);
    ctx.reflections.push_back(next * inv);
  }
  return ctx;
}

bool is_aligned(const AlignmentContext& ctx, int x) {
  const auto& inv = ctx.interval.inversions[static_cast<std::size_t>(x)];
  for (int g : ctx.interval.covers[static_cast<std::size_t>(x)])
    if (!ctx.required[static_cast<std::size_t>(g)].is_subset_of(inv)) return false;
  return true;
}

bool is_aligned(const AlignmentContext& ctx, const GroupElement& x) {
  const std::size_t k = ctx.interval.roots.size();
  Bitset inv(k);
  for (const auto& r : left_inversion_set(ctx.sys, x)) {
    auto it = ctx.interval.root_index.find(r);
    if (it == ctx.interval.root_index.end())
      throw InvalidInput("element is not below the base element: " + format_word(ctx.sys, x.word()));
    inv.set(static_cast<std::size_t>(it->second));
  }
  const int idx = ctx.interval.index_of(inv);
  if (idx < 0) throw InvariantViolation("interval is missing an element below the base");
  return is_aligned(ctx, idx);
}

std::vector<int> aligned_indices(const AlignmentContext& ctx) {
  auto keep = kernels::filter_indices(ctx.interval.elements.size(),
                                      [&](std::size_t i) { return is_aligned(ctx, static_cast<int>(i)); });
  return {keep.begin(), keep.end()};
}

std::vector<int> aligned_indices_serial(const AlignmentContext& ctx) {
  auto keep = kernels::filter_indices_serial(ctx.interval.elements.size(),
                                             [&](std::size_t i) { return is_aligned(ctx, static_cast<int>(i)); });
  return {keep.begin(), keep.end()};
}

FinitePoset AlignedSet::poset() const { return interval_poset(ctx.sys, ctx.interval, members); }

AlignedSet aligned_set_general(const CoxeterSystem& sys, const Word& base_word, DecompositionRule rule) {
  AlignedSet s{build_context(sys, base_word, rule), {}};
  s.members = aligned_indices(s.ctx);
  return s;
}

AlignedSet aligned_set_parabolic(const CoxeterSystem& sys, const std::vector<int>& j_set, const Word& c_word,
                                 DecompositionRule rule) {
  if (!sys.is_finite()) throw InvalidInput("parabolic alignment needs a finite system");
  if (!is_coxeter_word(sys, c_word)) throw InvalidInput("c must use every generator exactly once");
  const auto top = quotient_longest_element(sys, j_set);
  return aligned_set_general(sys, c_sorting_word(sys, top, c_word), rule);
}

NoncrossingElement psi(const AlignmentContext& ctx, int x) {
  if (!is_aligned(ctx, x)) throw InvalidInput("psi is defined on aligned elements only");
  NoncrossingElement out{Matrix::identity(ctx.sys.rank()), x, ctx.interval.covers[static_cast<std::size_t>(x)]};
  for (int g : out.ordered_covers) out.element = out.element * ctx.reflections[static_cast<std::size_t>(g)];
  return out;
}

std::vector<NoncrossingElement> noncrossing_set(const AlignedSet& set) {
  auto images = kernels::map_indices<NoncrossingElement>(
      set.members.size(), [&](std::size_t i) { return psi(set.ctx, set.members[i]); });
  std::unordered_set<Matrix, MatrixHash> seen;
  std::vector<NoncrossingElement> out;
  for (auto& e : images)
    if (seen.insert(e.element).second) out.push_back(std::move(e));
  return out;
}

}  // namespace parcat
