#include "parcat/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "parcat/errors.hpp"
#include "parcat/parallel.hpp"
#include "parcat/tamari.hpp"

namespace parcat {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> parts) : n_(n), parts_(std::move(parts)) {
  part_of_.assign(static_cast<std::size_t>(n), -1);
  for (auto& part : parts_) {
    if (part.empty()) throw InvalidInput("empty part in set partition");
    std::sort(part.begin(), part.end());
  }
  std::sort(parts_.begin(), parts_.end());
  for (std::size_t b = 0; b < parts_.size(); ++b)
    for (int x : parts_[b]) {
      if (x < 1 || x > n) throw InvalidInput("partition element " + std::to_string(x) + " outside [n]");
      if (part_of_[static_cast<std::size_t>(x - 1)] != -1) throw InvalidInput("element " + std::to_string(x) + " repeated");
      part_of_[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
    }
  for (int x = 1; x <= n; ++x)
    if (part_of_[static_cast<std::size_t>(x - 1)] == -1) throw InvalidInput("element " + std::to_string(x) + " missing");
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> parts;
  for (int i = 1; i <= n; ++i) parts.push_back({i});
  return SetPartition(n, std::move(parts));
}

SetPartition SetPartition::from_bumps(int n, const std::vector<PosPair>& bump_list) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto [a, b] : bump_list) {
    if (a < 1 || b > n || a >= b) throw InvalidInput("bad bump");
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  std::map<int, std::vector<int>> groups;
  for (int x = 1; x <= n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> parts;
  for (auto& [_, g] : groups) parts.push_back(std::move(g));
  SetPartition p(n, std::move(parts));
  auto got = bumps(p);
  auto want = bump_list;
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  if (got != want) throw InvalidInput("bump list is not the bump set of a partition");
  return p;
}

std::string to_string(const SetPartition& p) {
  std::string out = "{";
  for (std::size_t b = 0; b < p.parts().size(); ++b) {
    if (b) out += ",";
    out += "{";
    for (std::size_t k = 0; k < p.parts()[b].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(p.parts()[b][k]);
    }
    out += "}";
  }
  return out + "}";
}

std::vector<PosPair> bumps(const SetPartition& p) {
  std::vector<PosPair> out;
  for (const auto& part : p.parts())
    for (std::size_t k = 0; k + 1 < part.size(); ++k) out.emplace_back(part[k], part[k + 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int blocks) -> void {
    if (pos == n) {
      std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
      for (int x = 0; x < n; ++x) parts[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
      out.emplace_back(n, std::move(parts));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return {SetPartition(0, {})};
  rec(rec, 0, 0);
  return out;
}

namespace {

bool nc1(const SetPartition& p, const JContext& ctx) {
  for (const auto& part : p.parts())
    for (std::size_t k = 0; k + 1 < part.size(); ++k)
      if (ctx.same_region(part[k], part[k + 1])) return false;
  return true;
}

void require_size(const SetPartition& p, const JContext& ctx) {
  if (p.n() != ctx.n()) throw InvalidInput("partition size differs from context n");
}

}  // namespace

bool is_j_noncrossing(const SetPartition& p, const JContext& ctx) {
  require_size(p, ctx);
  if (!nc1(p, ctx)) return false;
  const auto bs = bumps(p);
  for (auto [i1, i2] : bs)
    for (auto [j1, j2] : bs) {
      if (i1 < j1 && j1 < i2 && i2 < j2) {
        if (!ctx.same_region(i1, j1) && !ctx.same_region(i2, j1)) return false;
      }
      if (i1 < j1 && j1 < j2 && j2 < i2) {
        if (ctx.same_region(i1, j1)) return false;
      }
    }
  return true;
}

bool is_j_nonnesting(const SetPartition& p, const JContext& ctx) {
  require_size(p, ctx);
  if (!nc1(p, ctx)) return false;
  const auto bs = bumps(p);
  for (auto [i1, i2] : bs)
    for (auto [j1, j2] : bs)
      if (i1 < j1 && j1 < j2 && j2 < i2) return false;
  return true;
}

std::vector<SetPartition> noncrossing_partitions(const JContext& ctx) {
  auto all = all_set_partitions(ctx.n());
  auto keep = kernels::filter_indices(all.size(), [&](std::size_t i) { return is_j_noncrossing(all[i], ctx); });
  std::vector<SetPartition> out;
  for (auto i : keep) out.push_back(all[i]);
  return out;
}

std::vector<SetPartition> nonnesting_partitions(const JContext& ctx) {
  auto all = all_set_partitions(ctx.n());
  auto keep = kernels::filter_indices(all.size(), [&](std::size_t i) { return is_j_nonnesting(all[i], ctx); });
  std::vector<SetPartition> out;
  for (auto i : keep) out.push_back(all[i]);
  return out;
}

SetPartition perm_to_nc(const Permutation& w, const JContext& ctx) {
  if (has_j231_pattern(w, ctx)) throw InvalidInput(ctx.format(w) + " contains a (J,231)-pattern");
  return SetPartition::from_bumps(w.size(), descent_pairs(w));
}

FinitePoset bump_poset(const SetPartition& p, const JContext& ctx) {
  if (!is_j_noncrossing(p, ctx)) throw InvalidInput(to_string(p) + " is not J-noncrossing");
  const auto& parts = p.parts();
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    std::string l = "{";
    for (std::size_t k = 0; k < parts[b].size(); ++k) l += (k ? "," : "") + std::to_string(parts[b][k]);
    labels.push_back(l + "}");
    for (std::size_t k = 0; k + 1 < parts[b].size(); ++k) {
      const int i1 = parts[b][k], i2 = parts[b][k + 1];
      for (std::size_t c = 0; c < parts.size(); ++c) {
        const int m = parts[c].front();
        if (c != b && i1 < m && m < i2 && !ctx.same_region(i1, m)) edges.emplace_back(static_cast<int>(b), static_cast<int>(c));
      }
    }
  }
  return FinitePoset::from_covers(static_cast<int>(parts.size()), edges, std::move(labels));
}

Permutation nc_to_perm(const SetPartition& p, const JContext& ctx) {
  const FinitePoset order = bump_poset(p, ctx);
  const auto& parts = p.parts();
  std::vector<int> values(static_cast<std::size_t>(p.n()), 0);
  auto solve = [&](auto&& self, const std::vector<int>& subset, int offset) -> void {
    if (subset.empty()) return;
    // subset is sorted by part minimum, so the first part holds the smallest position
    const int bar = subset.front();
    std::vector<int> left, right;
    int x_size = 0;
    for (int q : subset) {
      if (order.leq(bar, q)) {
        x_size += static_cast<int>(parts[static_cast<std::size_t>(q)].size());
        if (q != bar) left.push_back(q);
      } else {
        right.push_back(q);
      }
    }
    int v = offset + x_size;
    for (int pos : parts[static_cast<std::size_t>(bar)]) values[static_cast<std::size_t>(pos - 1)] = v--;
    self(self, left, offset);
    self(self, right, offset + x_size);
  };
  std::vector<int> all(parts.size());
  std::iota(all.begin(), all.end(), 0);
  solve(solve, all, 0);
  Permutation w(std::move(values));
  if (!is_quotient_member(w, ctx) || has_j231_pattern(w, ctx) ||
      SetPartition::from_bumps(w.size(), descent_pairs(w)) != p)
    throw InvariantViolation("nc_to_perm produced an inconsistent permutation for " + to_string(p));
  return w;
}

std::vector<PosPair> parabolic_roots_A(const JContext& ctx) {
  std::vector<PosPair> out;
  for (int i = 1; i <= ctx.n(); ++i)
    for (int j = i + 1; j <= ctx.n(); ++j)
      if (!ctx.same_region(i, j)) out.emplace_back(i, j);
  return out;
}

FinitePoset parabolic_root_poset_A(const JContext& ctx) {
  const auto roots = parabolic_roots_A(ctx);
  std::vector<std::string> labels;
  for (auto [i, j] : roots) labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return from_relation(
      static_cast<int>(roots.size()),
      [&](int a, int b) {
        auto [i1, i2] = roots[static_cast<std::size_t>(a)];
        auto [j1, j2] = roots[static_cast<std::size_t>(b)];
        return i1 >= j1 && i2 <= j2;
      },
      std::move(labels));
}

namespace {

// Membership grid over the parabolic filter, 1-based.
class RootGrid {
 public:
  explicit RootGrid(const JContext& ctx)
      : ctx_(ctx), n_(ctx.n()), in_(static_cast<std::size_t>((n_ + 2) * (n_ + 2)), 0) {}

  bool in_filter(int i, int j) const { return i >= 1 && j <= n_ && i < j && !ctx_.same_region(i, j); }
  bool get(int i, int j) const { return in_[idx(i, j)] != 0; }
  void set(int i, int j, bool v) { in_[idx(i, j)] = v ? 1 : 0; }

  // Minimal in the complement of the ideal.
  bool is_min_outside(int i, int j) const {
    if (!in_filter(i, j) || get(i, j)) return false;
    if (in_filter(i + 1, j) && !get(i + 1, j)) return false;
    if (in_filter(i, j - 1) && !get(i, j - 1)) return false;
    return true;
  }

  RootIdeal ideal() const {
    RootIdeal out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (in_filter(i, j) && get(i, j)) out.emplace_back(i, j);
    return out;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 2) + j); }
  const JContext& ctx_;
  int n_;
  std::vector<char> in_;
};

RootGrid grid_from_ideal(const RootIdeal& ideal, const JContext& ctx) {
  RootGrid g(ctx);
  for (auto [i, j] : ideal) {
    if (!g.in_filter(i, j)) throw InvalidInput("pair outside the parabolic root poset");
    g.set(i, j, true);
  }
  for (auto [i, j] : ideal) {
    if (g.in_filter(i + 1, j) && !g.get(i + 1, j)) throw InvalidInput("pair set is not down-closed");
    if (g.in_filter(i, j - 1) && !g.get(i, j - 1)) throw InvalidInput("pair set is not down-closed");
  }
  return g;
}

// Chosen columns of the piece above region r, with their labels.
struct Columns {
  std::vector<int> chosen;        // ascending
  std::map<int, int> label;       // column -> label
  std::map<int, int> column_of;   // label -> column
};

Columns choose_columns(const JContext& ctx, const RootGrid& g, int r, const std::map<int, int>& sub_label) {
  const auto& regions = ctx.regions();
  const auto& next = regions[static_cast<std::size_t>(r + 1)];
  Columns c;
  std::vector<int> labels;
  for (int j = next.first; j <= next.second; ++j) {
    c.chosen.push_back(j);
    labels.push_back(j);
  }
  for (int j = next.second + 1; j <= ctx.n(); ++j)
    if (g.get(next.first, j)) {
      auto it = sub_label.find(j);
      if (it == sub_label.end()) throw InvariantViolation("supported column without a label");
      c.chosen.push_back(j);
      labels.push_back(it->second);
    }
  std::sort(labels.begin(), labels.end());
  const std::size_t m = c.chosen.size();
  for (std::size_t t = 0; t < m; ++t) {
    c.label[c.chosen[t]] = labels[m - 1 - t];
    c.column_of[labels[m - 1 - t]] = c.chosen[t];
  }
  return c;
}

}  // namespace

bool is_root_ideal(const RootIdeal& ideal, const JContext& ctx) {
  try {
    grid_from_ideal(ideal, ctx);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

SetPartition ideal_to_nn(const RootIdeal& ideal, const JContext& ctx) {
  const RootGrid g = grid_from_ideal(ideal, ctx);
  std::vector<PosPair> m;
  for (int i = 1; i <= ctx.n(); ++i)
    for (int j = i + 1; j <= ctx.n(); ++j)
      if (g.is_min_outside(i, j)) m.emplace_back(i, j);
  return SetPartition::from_bumps(ctx.n(), m);
}

RootIdeal nn_to_ideal(const SetPartition& p, const JContext& ctx) {
  if (!is_j_nonnesting(p, ctx)) throw InvalidInput(to_string(p) + " is not J-nonnesting");
  const auto bs = bumps(p);
  RootIdeal out;
  for (auto [i, j] : parabolic_roots_A(ctx)) {
    bool above = false;
    for (auto [a, b] : bs)
      if (i <= a && b <= j) above = true;
    if (!above) out.push_back({i, j});
  }
  return out;
}

std::vector<RootIdeal> all_root_ideals(const JContext& ctx) {
  const auto roots = parabolic_roots_A(ctx);
  const auto poset = parabolic_root_poset_A(ctx);
  std::vector<RootIdeal> out;
  for (const auto& bits : enumerate_ideals(poset)) {
    RootIdeal r;
    bits.for_each([&](std::size_t k) { r.push_back(roots[k]); });
    std::sort(r.begin(), r.end());
    out.push_back(std::move(r));
  }
  return out;
}

SetPartition nn_to_nc(const SetPartition& p, const JContext& ctx) {
  const RootGrid g = grid_from_ideal(nn_to_ideal(p, ctx), ctx);
  const auto& regions = ctx.regions();
  std::vector<PosPair> out;
  std::map<int, int> sub_label;
  // innermost region first, so each level sees the labels of the one after it
  for (int r = ctx.region_count() - 2; r >= 0; --r) {
    const auto [a, k] = regions[static_cast<std::size_t>(r)];
    Columns cols = choose_columns(ctx, g, r, sub_label);
    for (int i = a; i <= k; ++i)
      for (int c : cols.chosen)
        if (g.is_min_outside(i, c)) out.emplace_back(a + k - i, cols.label.at(c));
    sub_label = std::move(cols.label);
  }
  SetPartition result = SetPartition::from_bumps(ctx.n(), out);
  if (!is_j_noncrossing(result, ctx))
    throw InvariantViolation("nn_to_nc produced a crossing partition from " + to_string(p));
  return result;
}

SetPartition nc_to_nn(const SetPartition& p, const JContext& ctx) {
  if (!is_j_noncrossing(p, ctx)) throw InvalidInput(to_string(p) + " is not J-noncrossing");
  const auto& regions = ctx.regions();
  const auto bs = bumps(p);
  RootGrid g(ctx);
  std::map<int, int> sub_label;
  for (int r = ctx.region_count() - 2; r >= 0; --r) {
    const auto [a, k] = regions[static_cast<std::size_t>(r)];
    Columns cols = choose_columns(ctx, g, r, sub_label);
    std::vector<PosPair> minimal;
    for (auto [s, t] : bs) {
      if (s < a || s > k) continue;
      auto it = cols.column_of.find(t);
      if (it == cols.column_of.end()) throw InvalidInput("bump (" + std::to_string(s) + "," + std::to_string(t) + ") has no supported column");
      minimal.emplace_back(a + k - s, it->second);
    }
    for (int i = a; i <= k; ++i)
      for (int c : cols.chosen) {
        bool outside = false;
        for (auto [mi, mc] : minimal)
          if (i <= mi && c >= mc) outside = true;
        g.set(i, c, !outside);
      }
    sub_label = std::move(cols.label);
  }
  SetPartition result = ideal_to_nn(g.ideal(), ctx);
  return result;
}

FerrersShape bounding_shape(const JContext& ctx) {
  std::vector<int> outside;
  for (int i = 1; i < ctx.n(); ++i)
    if (!ctx.in_j(i)) outside.push_back(i);
  FerrersShape shape;
  for (std::size_t t = outside.size(); t-- > 0;) {
    const int next = t + 1 < outside.size() ? outside[t + 1] : ctx.n();
    for (int rep = 0; rep < next - outside[t]; ++rep) shape.push_back(outside[t]);
  }
  return shape;
}

BigInt kreweras_count(const FerrersShape& shape) {
  const std::size_t k = shape.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (shape[i] <= 0) throw InvalidInput("Ferrers shape rows must be positive");
    if (i && shape[i] > shape[i - 1]) throw InvalidInput("Ferrers shape rows must weakly decrease");
  }
  if (k == 0) return 1;
  auto binom = [](int top, int bottom) -> BigInt {
    if (bottom < 0 || bottom > top) return 0;
    BigInt r = 1;
    for (int t = 1; t <= bottom; ++t) r = r * (top - bottom + t) / t;
    return r;
  };
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      a[i][j] = binom(shape[j] + 1, static_cast<int>(j) - static_cast<int>(i) + 1);
  // fraction-free elimination
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && a[swap_row][p] == 0) ++swap_row;
      if (swap_row == k) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

std::string to_string(const FerrersShape& shape) {
  std::string out = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) out += (i ? "," : "") + std::to_string(shape[i]);
  return out + ")";
}

}  // namespace parcat
