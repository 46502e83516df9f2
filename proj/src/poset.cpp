#include "parcat/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "parcat/errors.hpp"

namespace parcat {

namespace {

std::vector<std::string> default_labels(int n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) throw InvalidInput("label count differs from poset size");
  return labels;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

FinitePoset FinitePoset::from_covers(int size, const std::vector<std::pair<int, int>>& edges,
                                     std::vector<std::string> labels) {
  FinitePoset p;
  p.n_ = size;
  p.labels_ = default_labels(size, std::move(labels));
  const auto n = static_cast<std::size_t>(size);
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= size || b >= size) throw InvalidInput("edge endpoint out of range");
    if (a == b) throw PosetAxiomError("self loop in cover list", a, b);
    succ[static_cast<std::size_t>(a)].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int b : s) ++indeg[static_cast<std::size_t>(b)];
  }
  std::vector<int> order;
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < size; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) ready.push(i);
  while (!ready.empty()) {
    int a = ready.top();
    ready.pop();
    order.push_back(a);
    for (int b : succ[static_cast<std::size_t>(a)])
      if (--indeg[static_cast<std::size_t>(b)] == 0) ready.push(b);
  }
  if (static_cast<int>(order.size()) != size) {
    int bad = 0;
    while (indeg[static_cast<std::size_t>(bad)] == 0) ++bad;
    throw PosetAxiomError("cycle in cover relation", bad, bad);
  }
  p.above_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& ab = p.above_[static_cast<std::size_t>(*it)];
    for (int b : succ[static_cast<std::size_t>(*it)]) {
      ab.set(static_cast<std::size_t>(b));
      ab |= p.above_[static_cast<std::size_t>(b)];
    }
  }
  p.below_.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) p.above_[a].for_each([&](std::size_t b) { p.below_[b].set(a); });
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    Bitset implied(n);
    for (int c : succ[a]) implied |= p.above_[static_cast<std::size_t>(c)];
    for (int b : succ[a]) {
      if (implied.test(static_cast<std::size_t>(b))) continue;
      p.covers_.emplace_back(static_cast<int>(a), b);
      p.up_[a].push_back(b);
      p.down_[static_cast<std::size_t>(b)].push_back(static_cast<int>(a));
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& d : p.down_) std::sort(d.begin(), d.end());
  return p;
}

Bitset FinitePoset::down_set(int a) const {
  Bitset r = below(a);
  r.set(static_cast<std::size_t>(a));
  return r;
}

Bitset FinitePoset::up_set(int a) const {
  Bitset r = above(a);
  r.set(static_cast<std::size_t>(a));
  return r;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (down_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (up_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::linear_extension() const {
  std::vector<int> idx(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return below(a).count() < below(b).count();
  });
  return idx;
}

FinitePoset FinitePoset::dual() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(covers_.size());
  for (auto [a, b] : covers_) e.emplace_back(b, a);
  return from_covers(n_, e, labels_);
}

FinitePoset FinitePoset::induced(const std::vector<int>& subset) const {
  const int k = static_cast<int>(subset.size());
  std::vector<std::string> labels;
  for (int s : subset) labels.push_back(label(s));
  return from_relation(k, [&](int a, int b) { return leq(subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)]); },
                       std::move(labels));
}

int FinitePoset::index_of(const std::string& lbl) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == lbl) return i;
  return -1;
}

FinitePoset from_relation(int size, const std::function<bool(int, int)>& leq,
                          std::vector<std::string> labels) {
  const auto n = static_cast<std::size_t>(size);
  std::vector<Bitset> above(n, Bitset(n));
  for (int a = 0; a < size; ++a) {
    if (!leq(a, a)) throw PosetAxiomError("relation not reflexive", a, a);
    for (int b = 0; b < size; ++b)
      if (a != b && leq(a, b)) above[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t bad = n;
    above[a].for_each([&](std::size_t b) {
      if (bad == n && above[b].test(a)) bad = b;
    });
    if (bad != n) throw PosetAxiomError("relation not antisymmetric", static_cast<int>(a), static_cast<int>(bad));
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t bad_b = n, bad_c = n;
    above[a].for_each([&](std::size_t b) {
      if (bad_b != n) return;
      if (!above[b].is_subset_of(above[a])) {
        Bitset extra = above[b];
        extra.subtract(above[a]);
        extra.reset(a);
        if (extra.any()) {
          bad_b = b;
          bad_c = extra.first();
        }
      }
    });
    if (bad_b != n)
      throw PosetAxiomError("relation not transitive", static_cast<int>(a), static_cast<int>(bad_b), static_cast<int>(bad_c));
  }
  std::vector<std::pair<int, int>> covers;
  for (std::size_t a = 0; a < n; ++a) {
    Bitset implied(n);
    above[a].for_each([&](std::size_t c) { implied |= above[c]; });
    Bitset cov = above[a];
    cov.subtract(implied);
    cov.for_each([&](std::size_t b) { covers.emplace_back(static_cast<int>(a), static_cast<int>(b)); });
  }
  return FinitePoset::from_covers(size, covers, std::move(labels));
}

namespace {

// Greatest element of a set if it exists, else -1.
int greatest_in(const FinitePoset& p, const Bitset& s) {
  int best = -1;
  std::size_t best_count = 0;
  s.for_each([&](std::size_t m) {
    std::size_t c = p.below(static_cast<int>(m)).count();
    if (best < 0 || c > best_count) {
      best = static_cast<int>(m);
      best_count = c;
    }
  });
  if (best < 0) return -1;
  return s.is_subset_of(p.down_set(best)) ? best : -1;
}

int least_in(const FinitePoset& p, const Bitset& s) {
  int best = -1;
  std::size_t best_count = 0;
  s.for_each([&](std::size_t m) {
    std::size_t c = p.above(static_cast<int>(m)).count();
    if (best < 0 || c > best_count) {
      best = static_cast<int>(m);
      best_count = c;
    }
  });
  if (best < 0) return -1;
  return s.is_subset_of(p.up_set(best)) ? best : -1;
}

std::vector<int> maximal_in(const FinitePoset& p, const Bitset& s) {
  std::vector<int> out;
  s.for_each([&](std::size_t m) {
    if (!p.above(static_cast<int>(m)).intersects(s)) out.push_back(static_cast<int>(m));
  });
  return out;
}

std::vector<int> minimal_in(const FinitePoset& p, const Bitset& s) {
  std::vector<int> out;
  s.for_each([&](std::size_t m) {
    if (!p.below(static_cast<int>(m)).intersects(s)) out.push_back(static_cast<int>(m));
  });
  return out;
}

}  // namespace

LatticeReport check_lattice(const FinitePoset& p) {
  LatticeReport rep;
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Bitset lower = p.down_set(a) & p.down_set(b);
      if (greatest_in(p, lower) < 0) {
        rep.is_lattice = false;
        rep.witness = {a, b};
        rep.meet_failed = true;
        rep.bounds = maximal_in(p, lower);
        return rep;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Bitset upper = p.up_set(a) & p.up_set(b);
      if (least_in(p, upper) < 0) {
        rep.is_lattice = false;
        rep.witness = {a, b};
        rep.meet_failed = false;
        rep.bounds = minimal_in(p, upper);
        return rep;
      }
    }
  return rep;
}

bool is_lattice(const FinitePoset& p) { return check_lattice(p).is_lattice; }

int meet(const FinitePoset& p, int a, int b) {
  int m = greatest_in(p, p.down_set(a) & p.down_set(b));
  if (m < 0) throw InvalidInput("no meet for " + p.label(a) + ", " + p.label(b));
  return m;
}

int join(const FinitePoset& p, int a, int b) {
  int m = least_in(p, p.up_set(a) & p.up_set(b));
  if (m < 0) throw InvalidInput("no join for " + p.label(a) + ", " + p.label(b));
  return m;
}

namespace {

class IdealCounter {
 public:
  explicit IdealCounter(const FinitePoset& p) : p_(p) {}

  std::uint64_t count(const Bitset& s) {
    if (s.none()) return 1;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    // split on the element with the largest comparability inside s
    std::size_t pick = 0, best = 0;
    bool first = true;
    s.for_each([&](std::size_t m) {
      std::size_t w = (p_.above(static_cast<int>(m)) & s).count() + (p_.below(static_cast<int>(m)) & s).count();
      if (first || w > best) {
        pick = m;
        best = w;
        first = false;
      }
    });
    if (best == 0) {
      std::uint64_t r = std::uint64_t{1} << s.count();
      memo_.emplace(s, r);
      return r;
    }
    Bitset without = s;
    without.subtract(p_.up_set(static_cast<int>(pick)));
    Bitset with = s;
    with.subtract(p_.down_set(static_cast<int>(pick)));
    std::uint64_t r = count(without) + count(with);
    memo_.emplace(s, r);
    return r;
  }

 private:
  const FinitePoset& p_;
  std::unordered_map<Bitset, std::uint64_t, BitsetHash> memo_;
};

}  // namespace

std::uint64_t count_ideals(const FinitePoset& p) {
  Bitset all(static_cast<std::size_t>(p.size()));
  all.set_all();
  IdealCounter counter(p);
  return counter.count(all);
}

std::vector<Bitset> enumerate_ideals(const FinitePoset& p, std::size_t limit) {
  std::vector<Bitset> out;
  const auto order = p.linear_extension();
  Bitset cur(static_cast<std::size_t>(p.size()));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (out.size() > limit) throw InvalidInput("ideal enumeration limit exceeded");
    if (k == order.size()) {
      out.push_back(cur);
      return;
    }
    const int x = order[k];
    self(self, k + 1);
    if (p.below(x).is_subset_of(cur)) {
      cur.set(static_cast<std::size_t>(x));
      self(self, k + 1);
      cur.reset(static_cast<std::size_t>(x));
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

FinitePoset quotient(const FinitePoset& p, const std::vector<std::vector<int>>& classes,
                     std::vector<std::string> labels) {
  const int n = p.size();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) {
      if (x < 0 || x >= n) throw CongruenceError("class member out of range");
      if (cls[static_cast<std::size_t>(x)] != -1) throw CongruenceError("element " + p.label(x) + " in two classes");
      cls[static_cast<std::size_t>(x)] = static_cast<int>(c);
    }
  for (int x = 0; x < n; ++x)
    if (cls[static_cast<std::size_t>(x)] == -1) throw CongruenceError("element " + p.label(x) + " in no class");

  std::vector<int> bottom(classes.size()), top(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw CongruenceError("empty class");
    Bitset members(static_cast<std::size_t>(n));
    for (int x : classes[c]) members.set(static_cast<std::size_t>(x));
    int lo = least_in(p, members), hi = greatest_in(p, members);
    if (lo < 0 || hi < 0) throw CongruenceError("class of " + p.label(classes[c][0]) + " lacks a bottom or top");
    Bitset interval = p.up_set(lo) & p.down_set(hi);
    if (!(interval == members))
      throw CongruenceError("class [" + p.label(lo) + ", " + p.label(hi) + "] is not an interval");
    bottom[c] = lo;
    top[c] = hi;
  }
  for (auto [a, b] : p.covers()) {
    auto ca = static_cast<std::size_t>(cls[static_cast<std::size_t>(a)]);
    auto cb = static_cast<std::size_t>(cls[static_cast<std::size_t>(b)]);
    if (!p.leq(bottom[ca], bottom[cb]))
      throw CongruenceError("down projection not order preserving at " + p.label(a) + " < " + p.label(b));
    if (!p.leq(top[ca], top[cb]))
      throw CongruenceError("up projection not order preserving at " + p.label(a) + " < " + p.label(b));
  }
  if (labels.empty())
    for (std::size_t c = 0; c < classes.size(); ++c) labels.push_back(p.label(bottom[c]));
  return from_relation(static_cast<int>(classes.size()),
                       [&](int x, int y) { return p.leq(bottom[static_cast<std::size_t>(x)], bottom[static_cast<std::size_t>(y)]); },
                       std::move(labels));
}

namespace {

// Joint color refinement over both posets so colors are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const FinitePoset& p, const FinitePoset& q) {
  using Sig = std::vector<int>;
  std::map<Sig, int> palette;
  auto initial = [&](const FinitePoset& x, int v) {
    return Sig{static_cast<int>(x.below(v).count()), static_cast<int>(x.above(v).count()),
               static_cast<int>(x.lower_covers(v).size()), static_cast<int>(x.upper_covers(v).size())};
  };
  std::vector<int> cp(static_cast<std::size_t>(p.size())), cq(static_cast<std::size_t>(q.size()));
  for (int v = 0; v < p.size(); ++v) cp[static_cast<std::size_t>(v)] = palette.emplace(initial(p, v), static_cast<int>(palette.size())).first->second;
  for (int v = 0; v < q.size(); ++v) cq[static_cast<std::size_t>(v)] = palette.emplace(initial(q, v), static_cast<int>(palette.size())).first->second;
  std::size_t classes = palette.size();
  while (true) {
    std::map<Sig, int> next;
    auto sig = [&](const FinitePoset& x, const std::vector<int>& col, int v) {
      Sig s{col[static_cast<std::size_t>(v)], -1};
      Sig ups, downs;
      for (int u : x.upper_covers(v)) ups.push_back(col[static_cast<std::size_t>(u)]);
      for (int u : x.lower_covers(v)) downs.push_back(col[static_cast<std::size_t>(u)]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      s.insert(s.end(), ups.begin(), ups.end());
      s.push_back(-2);
      s.insert(s.end(), downs.begin(), downs.end());
      return s;
    };
    std::vector<int> np(cp.size()), nq(cq.size());
    for (int v = 0; v < p.size(); ++v) np[static_cast<std::size_t>(v)] = next.emplace(sig(p, cp, v), static_cast<int>(next.size())).first->second;
    for (int v = 0; v < q.size(); ++v) nq[static_cast<std::size_t>(v)] = next.emplace(sig(q, cq, v), static_cast<int>(next.size())).first->second;
    cp = std::move(np);
    cq = std::move(nq);
    if (next.size() == classes) break;
    classes = next.size();
  }
  return {cp, cq};
}

}  // namespace

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return false;
  const int n = p.size();
  auto [cp, cq] = refine_colors(p, q);
  {
    auto hp = cp, hq = cq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return false;
  }
  // map p's vertices in order of rarest color first, then bottom-up
  std::map<int, int> freq;
  for (int c : cp) ++freq[c];
  std::vector<int> order = p.linear_extension();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return freq[cp[static_cast<std::size_t>(a)]] < freq[cp[static_cast<std::size_t>(b)]];
  });
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> by_color(static_cast<std::size_t>(*std::max_element(cq.begin(), cq.end()) + 1));
  for (int w = 0; w < n; ++w) by_color[static_cast<std::size_t>(cq[static_cast<std::size_t>(w)])].push_back(w);

  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    const int v = order[k];
    for (int w : by_color[static_cast<std::size_t>(cp[static_cast<std::size_t>(v)])]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) {
        const int u = order[t];
        const int fu = image[static_cast<std::size_t>(u)];
        ok = p.less(u, v) == q.less(fu, w) && p.less(v, u) == q.less(w, fu);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (self(self, k + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::string to_dot(const FinitePoset& p, const std::string& name, const std::vector<std::string>& node_attrs) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << p.label(i) << "\"";
    if (static_cast<std::size_t>(i) < node_attrs.size() && !node_attrs[static_cast<std::size_t>(i)].empty())
      out << ", " << node_attrs[static_cast<std::size_t>(i)];
    out << "];\n";
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_cover_list(const FinitePoset& p) {
  std::ostringstream out;
  std::vector<char> mentioned(static_cast<std::size_t>(p.size()), 0);
  for (auto [a, b] : p.covers()) {
    out << p.label(a) << "<" << p.label(b) << "\n";
    mentioned[static_cast<std::size_t>(a)] = mentioned[static_cast<std::size_t>(b)] = 1;
  }
  for (int i = 0; i < p.size(); ++i)
    if (!mentioned[static_cast<std::size_t>(i)]) out << p.label(i) << "\n";
  return out.str();
}

FinitePoset parse_cover_list(const std::string& text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  auto id = [&](const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw InvalidInput("empty element label in cover list");
    auto [it, fresh] = index.emplace(s, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(s);
    return it->second;
  };
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto lt = line.find('<');
    if (lt == std::string::npos) {
      id(line);
    } else {
      int a = id(line.substr(0, lt));
      int b = id(line.substr(lt + 1));
      edges.emplace_back(a, b);
    }
  }
  return FinitePoset::from_covers(static_cast<int>(labels.size()), edges, labels);
}

FinitePoset chain_poset(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return FinitePoset::from_covers(k, e);
}

FinitePoset antichain_poset(int k) { return FinitePoset::from_covers(k, {}); }

}  // namespace parcat
