#include "parcat/tamari.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "parcat/errors.hpp"
#include "parcat/parallel.hpp"

namespace parcat {

namespace {

void require_member(const Permutation& w, const JContext& ctx) {
  if (!is_quotient_member(w, ctx))
    throw InvalidInput(to_string(w) + " is not in the parabolic quotient " + ctx.describe());
}

// Smallest i starting a (J,231)-pattern, with k its partner; 0 if none.
PosPair first_231(const Permutation& w, const JContext& ctx) {
  const auto inv = w.inverse();
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) == 1) continue;
    const int k = inv(w(i) - 1);
    if (k < i || ctx.same_region(i, k)) continue;
    for (int j = i + 1; j < k; ++j)
      if (w(j) > w(i) && !ctx.same_region(i, j) && !ctx.same_region(j, k)) return {i, k};
  }
  return {0, 0};
}

PosPair first_132(const Permutation& w, const JContext& ctx) {
  const auto inv = w.inverse();
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) == w.size()) continue;
    const int k = inv(w(i) + 1);
    if (k < i || ctx.same_region(i, k)) continue;
    for (int j = i + 1; j < k; ++j)
      if (w(j) > w(k) && !ctx.same_region(i, j) && !ctx.same_region(j, k)) return {i, k};
  }
  return {0, 0};
}

}  // namespace

bool has_j231_pattern(const Permutation& w, const JContext& ctx) {
  require_member(w, ctx);
  return first_231(w, ctx).first != 0;
}

bool has_j132_pattern(const Permutation& w, const JContext& ctx) {
  require_member(w, ctx);
  return first_132(w, ctx).first != 0;
}

bool is_j_compressed(const Permutation& w, const JContext& ctx) {
  require_member(w, ctx);
  for (auto [i, k] : descent_pairs(w)) {
    if (ctx.same_region(i, k)) continue;
    for (int j = i + 1; j < k; ++j) {
      if (ctx.same_region(i, j) || ctx.same_region(j, k)) continue;
      if (!(w(i) > w(j))) return false;
    }
  }
  return true;
}

Permutation pi_down(const Permutation& w, const JContext& ctx) {
  require_member(w, ctx);
  Permutation cur = w;
  for (auto p = first_231(cur, ctx); p.first != 0; p = first_231(cur, ctx))
    cur = cur.with_swapped_positions(p.first, p.second);
  return cur;
}

Permutation pi_up(const Permutation& w, const JContext& ctx) {
  require_member(w, ctx);
  Permutation cur = w;
  for (auto p = first_132(cur, ctx); p.first != 0; p = first_132(cur, ctx))
    cur = cur.with_swapped_positions(p.first, p.second);
  return cur;
}

std::vector<Permutation> avoiding_elements(const JContext& ctx) {
  auto all = enumerate_quotient(ctx);
  auto keep = kernels::filter_indices(all.size(), [&](std::size_t i) { return first_231(all[i], ctx).first == 0; });
  std::vector<Permutation> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(all[i]);
  return out;
}

std::vector<Permutation> avoiding_elements_serial(const JContext& ctx) {
  auto all = enumerate_quotient(ctx);
  auto keep = kernels::filter_indices_serial(all.size(), [&](std::size_t i) { return first_231(all[i], ctx).first == 0; });
  std::vector<Permutation> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(all[i]);
  return out;
}

namespace {

FinitePoset containment_poset(const JContext& ctx, const std::vector<Permutation>& elements) {
  std::vector<InversionSet> invs;
  invs.reserve(elements.size());
  std::vector<std::string> labels;
  for (const auto& e : elements) {
    invs.push_back(inversion_set(e));
    labels.push_back(ctx.format(e));
  }
  return from_relation(static_cast<int>(elements.size()),
                       [&](int a, int b) { return invs[static_cast<std::size_t>(a)].is_subset_of(invs[static_cast<std::size_t>(b)]); },
                       std::move(labels));
}

}  // namespace

TamariLattice tamari_lattice(const JContext& ctx) {
  TamariLattice t{ctx, avoiding_elements(ctx), {}};
  t.poset = containment_poset(ctx, t.elements);
  return t;
}

FinitePoset weak_quotient_poset(const JContext& ctx, const std::vector<Permutation>& elements) {
  std::unordered_map<Permutation, int, PermutationHash> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<int>(i));
    labels.push_back(ctx.format(elements[i]));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& up : upper_covers(elements[i]))
      if (auto it = index.find(up); it != index.end()) edges.emplace_back(static_cast<int>(i), it->second);
  return FinitePoset::from_covers(static_cast<int>(elements.size()), edges, std::move(labels));
}

Permutation tamari_meet(const Permutation& u, const Permutation& v, const JContext& ctx) {
  if (has_j231_pattern(u, ctx) || has_j231_pattern(v, ctx))
    throw InvalidInput("tamari_meet expects (J,231)-avoiding arguments");
  return pi_down(weak_meet(u, v), ctx);
}

Permutation tamari_join(const Permutation& u, const Permutation& v, const JContext& ctx) {
  if (has_j231_pattern(u, ctx) || has_j231_pattern(v, ctx))
    throw InvalidInput("tamari_join expects (J,231)-avoiding arguments");
  return pi_down(weak_join(u, v), ctx);
}

std::vector<CongruenceClass> congruence_classes(const JContext& ctx) {
  std::map<Permutation, std::vector<Permutation>> groups;
  for (auto& w : enumerate_quotient(ctx)) groups[pi_down(w, ctx)].push_back(w);
  std::vector<CongruenceClass> out;
  out.reserve(groups.size());
  for (auto& [bottom, members] : groups) {
    Permutation top = pi_up(bottom, ctx);
    out.push_back({bottom, top, std::move(members)});
  }
  return out;
}

QuotientReport verify_quotient(const JContext& ctx) {
  QuotientReport rep;
  const auto all = enumerate_quotient(ctx);
  rep.quotient_size = all.size();
  const auto tam = tamari_lattice(ctx);
  rep.tamari_size = tam.elements.size();
  auto lat = check_lattice(tam.poset);
  rep.is_lattice = lat.is_lattice;
  if (!lat.is_lattice)
    rep.failures.push_back("T is not a lattice at " + tam.poset.label(lat.witness->first) + ", " +
                           tam.poset.label(lat.witness->second));

  std::unordered_map<Permutation, int, PermutationHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], static_cast<int>(i));
  std::vector<Permutation> down(all.size()), up(all.size());
  std::vector<InversionSet> invs(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    down[i] = pi_down(all[i], ctx);
    up[i] = pi_up(all[i], ctx);
    invs[i] = inversion_set(all[i]);
  }

  const auto classes = congruence_classes(ctx);
  rep.class_count = classes.size();
  rep.classes_are_intervals = true;
  for (const auto& cls : classes) {
    const auto lo = inversion_set(cls.bottom), hi = inversion_set(cls.top);
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool in_interval = lo.is_subset_of(invs[i]) && invs[i].is_subset_of(hi);
      bool in_class = down[i] == cls.bottom;
      if (in_interval != in_class) {
        rep.classes_are_intervals = false;
        rep.failures.push_back("class of " + ctx.format(cls.bottom) + " differs from its interval at " +
                               ctx.format(all[i]));
        break;
      }
    }
    if (has_j132_pattern(cls.top, ctx)) {
      rep.classes_are_intervals = false;
      rep.failures.push_back("class top " + ctx.format(cls.top) + " contains a (J,132)-pattern");
    }
  }

  const auto weak = weak_quotient_poset(ctx, all);
  rep.projections_order_preserving = true;
  for (auto [a, b] : weak.covers()) {
    auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    if (!weak_leq(down[ua], down[ub]) || !weak_leq(up[ua], up[ub])) {
      rep.projections_order_preserving = false;
      rep.failures.push_back("projection not monotone on " + ctx.format(all[ua]) + " < " + ctx.format(all[ub]));
      break;
    }
  }

  std::vector<std::vector<int>> idx_classes;
  for (const auto& cls : classes) {
    std::vector<int> m;
    for (const auto& x : cls.members) m.push_back(index.at(x));
    idx_classes.push_back(std::move(m));
  }
  try {
    auto q = quotient(weak, idx_classes);
    rep.quotient_isomorphic = is_isomorphic(q, tam.poset);
    if (!rep.quotient_isomorphic) rep.failures.push_back("quotient poset not isomorphic to T");
  } catch (const CongruenceError& e) {
    rep.quotient_isomorphic = false;
    rep.failures.push_back(std::string("congruence check failed: ") + e.what());
  }
  return rep;
}

}  // namespace parcat
