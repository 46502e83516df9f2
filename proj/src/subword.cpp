#include "parcat/subword.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "parcat/errors.hpp"
#include "parcat/parallel.hpp"

namespace parcat {

namespace {

// Weak-order interval [e, target] with a step table x -> x s (or -1).
struct StepTable {
  WeakInterval iv;
  std::vector<int> next;
  int rank = 0;
  int top = -1;

  int step(int x, int s) const { return next[static_cast<std::size_t>(x * rank + s)]; }
};

StepTable build_steps(const SubwordComplexSpec& spec) {
  StepTable t;
  t.rank = spec.sys.rank();
  t.iv = enumerate_weak_interval(spec.sys, spec.target.word());
  const auto n = t.iv.elements.size();
  t.next.assign(n * static_cast<std::size_t>(t.rank), -1);
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& m = t.iv.elements[x].matrix();
    for (int s = 0; s < t.rank; ++s) {
      if (!m.column_positive(s)) continue;
      auto it = t.iv.root_index.find(m.column(s));
      if (it == t.iv.root_index.end()) continue;
      Bitset inv = t.iv.inversions[x];
      inv.set(static_cast<std::size_t>(it->second));
      t.next[x * static_cast<std::size_t>(t.rank) + static_cast<std::size_t>(s)] = t.iv.index_of(inv);
    }
  }
  Bitset full(t.iv.roots.size());
  for (std::size_t k = 0; k < t.iv.roots.size(); ++k) full.set(k);
  t.top = t.iv.index_of(full);
  return t;
}

// ways[pos][x]: completions of the suffix q[pos..] from x that end at the top.
std::vector<std::vector<std::uint64_t>> completion_counts(const SubwordComplexSpec& spec, const StepTable& t) {
  const std::size_t len = spec.q.size();
  const std::size_t n = t.iv.elements.size();
  std::vector<std::vector<std::uint64_t>> ways(len + 1, std::vector<std::uint64_t>(n, 0));
  ways[len][static_cast<std::size_t>(t.top)] = 1;
  for (std::size_t pos = len; pos-- > 0;) {
    const int s = spec.q[pos];
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t w = ways[pos + 1][x];
      const int y = t.step(static_cast<int>(x), s);
      if (y >= 0) w += ways[pos + 1][static_cast<std::size_t>(y)];
      ways[pos][x] = w;
    }
  }
  return ways;
}

void check_letters(const SubwordComplexSpec& spec) {
  for (int s : spec.q)
    if (s < 0 || s >= spec.sys.rank()) throw InvalidInput("word letter out of range");
}

}  // namespace

std::uint64_t facet_count(const SubwordComplexSpec& spec) {
  check_letters(spec);
  if (spec.target.length() > static_cast<int>(spec.q.size())) return 0;
  const auto t = build_steps(spec);
  return completion_counts(spec, t)[0][0];
}

std::vector<Facet> facets(const SubwordComplexSpec& spec) {
  check_letters(spec);
  std::vector<Facet> out;
  if (spec.target.length() > static_cast<int>(spec.q.size())) return out;
  const auto t = build_steps(spec);
  const auto ways = completion_counts(spec, t);
  const int len = static_cast<int>(spec.q.size());

  // Dead states have zero completions, so every branch taken here yields a facet.
  std::vector<char> taken(spec.q.size(), 0);
  auto dfs = [&](auto&& self, int pos, int x) -> void {
    if (pos == len) {
      Facet f;
      for (int p = 0; p < len; ++p) {
        if (taken[static_cast<std::size_t>(p)]) f.witness.push_back(spec.q[static_cast<std::size_t>(p)]);
        else f.positions.push_back(p + 1);
      }
      out.push_back(std::move(f));
      return;
    }
    const auto upos = static_cast<std::size_t>(pos);
    if (ways[upos + 1][static_cast<std::size_t>(x)] > 0) self(self, pos + 1, x);
    const int y = t.step(x, spec.q[upos]);
    if (y >= 0 && ways[upos + 1][static_cast<std::size_t>(y)] > 0) {
      taken[upos] = 1;
      self(self, pos + 1, y);
      taken[upos] = 0;
    }
  };
  if (ways[0][0] > 0) dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.positions < b.positions; });
  return out;
}

SubwordComplexSpec cluster_complex(const CoxeterSystem& sys, const std::vector<int>& j_set, const Word& c_word) {
  if (!sys.is_finite()) throw InvalidInput("cluster complexes need a finite system");
  if (!is_coxeter_word(sys, c_word)) throw InvalidInput("c must use every generator exactly once");
  SubwordComplexSpec spec{sys, c_word, quotient_longest_element(sys, j_set)};
  const Word tail = c_sorting_word(sys, longest_element(sys), c_word);
  spec.q.insert(spec.q.end(), tail.begin(), tail.end());
  return spec;
}

namespace {

std::map<std::vector<int>, int> facet_index(const std::vector<Facet>& all) {
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < all.size(); ++i) idx.emplace(all[i].positions, static_cast<int>(i));
  return idx;
}

std::vector<Flip> flips_with(const std::vector<Facet>& all, const std::map<std::vector<int>, int>& idx, int f) {
  std::vector<Flip> out;
  const auto& pos = all[static_cast<std::size_t>(f)].positions;
  const int len = pos.empty() ? 0
                              : static_cast<int>(all[static_cast<std::size_t>(f)].witness.size() + pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const int i = pos[k];
    for (int j = i + 1; j <= len; ++j) {
      if (std::binary_search(pos.begin(), pos.end(), j)) continue;
      std::vector<int> other = pos;
      other.erase(other.begin() + static_cast<std::ptrdiff_t>(k));
      other.insert(std::upper_bound(other.begin(), other.end(), j), j);
      auto it = idx.find(other);
      if (it != idx.end()) out.push_back({i, j, it->second});
    }
  }
  return out;
}

}  // namespace

std::vector<Flip> flips(const std::vector<Facet>& all, int f) {
  if (f < 0 || f >= static_cast<int>(all.size())) throw InvalidInput("facet index out of range");
  return flips_with(all, facet_index(all), f);
}

std::vector<std::pair<int, int>> flip_graph(const std::vector<Facet>& all) {
  const auto idx = facet_index(all);
  auto per = kernels::map_indices<std::vector<Flip>>(
      all.size(), [&](std::size_t f) { return flips_with(all, idx, static_cast<int>(f)); });
  std::vector<std::pair<int, int>> edges;
  for (std::size_t f = 0; f < per.size(); ++f)
    for (const auto& fl : per[f]) edges.emplace_back(static_cast<int>(f), fl.target);
  return edges;
}

std::vector<std::pair<int, int>> flip_graph_serial(const std::vector<Facet>& all) {
  const auto idx = facet_index(all);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t f = 0; f < all.size(); ++f)
    for (const auto& fl : flips_with(all, idx, static_cast<int>(f))) edges.emplace_back(static_cast<int>(f), fl.target);
  return edges;
}

FinitePoset flip_poset(const std::vector<Facet>& all) {
  std::vector<std::string> labels;
  for (const auto& f : all) {
    std::string s = "{";
    for (std::size_t k = 0; k < f.positions.size(); ++k) s += (k ? "," : "") + std::to_string(f.positions[k]);
    labels.push_back(s + "}");
  }
  try {
    return FinitePoset::from_covers(static_cast<int>(all.size()), flip_graph(all), std::move(labels));
  } catch (const PosetAxiomError& e) {
    throw InvariantViolation(std::string("flip graph has a directed cycle: ") + e.what());
  }
}

bool flip_graph_connected(const std::vector<Facet>& all) {
  if (all.empty()) return true;
  std::vector<std::vector<int>> adj(all.size());
  for (auto [a, b] : flip_graph(all)) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> seen(all.size(), 0);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        todo.push(y);
      }
  }
  return reached == all.size();
}

Permutation w_from_shape(const std::vector<int>& shape, int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  Permutation w = Permutation::identity(n);
  if (shape.empty()) return w;
  // Rows are right-aligned in the staircase of S_n, so the offset is n-1 rather than lambda_1.
  const int top = n - 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const int i = static_cast<int>(r) + 1;
    if (shape[r] < 0 || (r > 0 && shape[r] > shape[r - 1])) throw InvalidInput("shape rows must weakly decrease");
    for (int j = top + 2 - i - shape[r]; j <= top + 1 - i; ++j) {
      if (j < 1 || j >= n) throw InvalidInput("shape does not fit in S_" + std::to_string(n));
      w = w.with_swapped_positions(j, j + 1);
    }
  }
  return w;
}

}  // namespace parcat
