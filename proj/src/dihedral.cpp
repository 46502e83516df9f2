#include "parcat/dihedral.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parcat/errors.hpp"

namespace parcat {

Dihedral::Dihedral(int m) : m_(m) {
  if (m < 2) throw InvalidInput("I2(m) needs m >= 2");
}

Dihedral::Element Dihedral::generator(int i) const {
  if (i == 0) return {true, 0};
  if (i == 1) return {true, m_ - 1};
  throw InvalidInput("I2(m) has generators s1, s2 only");
}

Dihedral::Element Dihedral::multiply(const Element& a, const Element& b) const {
  if (!a.flip && !b.flip) return {false, mod(a.k + b.k)};
  if (!a.flip) return {true, mod(a.k + b.k)};
  if (!b.flip) return {true, mod(a.k - b.k)};
  return {false, mod(a.k - b.k)};
}

Dihedral::Element Dihedral::inverse(const Element& a) const { return a.flip ? a : Element{false, mod(-a.k)}; }

Dihedral::Element Dihedral::from_word(const Word& w) const {
  Element x = identity();
  for (int s : w) x = multiply(x, generator(s));
  return x;
}

Dihedral::Element Dihedral::longest() const {
  Word w;
  for (int i = 0; i < m_; ++i) w.push_back(i % 2);
  return from_word(w);
}

int Dihedral::length(const Element& x) const {
  const int k = mod(x.k);
  if (!x.flip) return 2 * std::min(k, m_ - k);
  return std::min(2 * k + 1, 2 * (m_ - 1 - k) + 1);
}

Word Dihedral::reduced_word(const Element& x, int first) const {
  const int len = length(x);
  for (int start : {first, 1 - first}) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back((start + i) % 2);
    if (from_word(w) == x) return w;
  }
  throw InvariantViolation("no alternating word for a dihedral element");
}

std::vector<int> Dihedral::inversion_sequence(const Word& reduced) const {
  if (!is_reduced(reduced)) throw InvalidInput("word is not reduced");
  std::vector<int> out;
  Element prefix = identity();
  for (int s : reduced) {
    const Element t = multiply(multiply(prefix, generator(s)), inverse(prefix));
    out.push_back(mod(t.k));
    prefix = multiply(prefix, generator(s));
  }
  return out;
}

std::vector<int> Dihedral::inversion_set(const Element& x) const {
  auto v = inversion_sequence(reduced_word(x));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> Dihedral::cover_reflections(const Element& x) const {
  std::vector<int> out;
  for (int s = 0; s < 2; ++s)
    if (length(multiply(x, generator(s))) < length(x))
      out.push_back(mod(multiply(multiply(x, generator(s)), inverse(x)).k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Dihedral::Element> Dihedral::elements() const {
  std::vector<Element> out{identity()};
  for (int len = 1; len <= m_; ++len)
    for (int start = 0; start < 2; ++start) {
      Word w;
      for (int i = 0; i < len; ++i) w.push_back((start + i) % 2);
      const Element x = from_word(w);
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  return out;
}

Dihedral::Element Dihedral::quotient_longest(const std::vector<int>& j_set) const {
  Element x = longest();
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : j_set) {
      const Element y = multiply(generator(j), x);
      if (length(y) < length(x)) {
        x = y;
        changed = true;
      }
    }
  }
  return x;
}

Word Dihedral::c_sorting_word(const Element& x, const Word& c) const {
  Word out;
  Element rest = x;
  while (length(rest) > 0) {
    for (int s : c) {
      const Element y = multiply(generator(s), rest);
      if (length(y) < length(rest)) {
        out.push_back(s);
        rest = y;
      }
    }
  }
  return out;
}

FinitePoset Dihedral::root_poset() const {
  std::vector<int> middle;
  for (int j = 1; j + 1 < m_; ++j) middle.push_back(j);
  // heights grow towards the middle root
  std::stable_sort(middle.begin(), middle.end(),
                   [&](int a, int b) { return std::min(a, m_ - 1 - a) < std::min(b, m_ - 1 - b); });
  std::vector<std::pair<int, int>> edges;
  if (!middle.empty()) {
    edges.emplace_back(0, middle[0]);
    edges.emplace_back(m_ - 1, middle[0]);
    for (std::size_t i = 0; i + 1 < middle.size(); ++i) edges.emplace_back(middle[i], middle[i + 1]);
  }
  std::vector<std::string> labels;
  for (int j = 0; j < m_; ++j) labels.push_back("r" + std::to_string(j));
  return FinitePoset::from_covers(m_, edges, labels);
}

namespace {

void check_args(const std::vector<int>& j_set, const Word& c) {
  for (int j : j_set)
    if (j < 0 || j > 1) throw InvalidInput("J contains an unknown generator");
  if (!(c == Word{0, 1} || c == Word{1, 0})) throw InvalidInput("c must be s1 s2 or s2 s1");
}

struct DihedralContext {
  Dihedral::Element top;
  std::vector<int> order;         // root index at each inversion position
  std::map<int, int> position;    // root index -> position
  std::vector<Dihedral::Element> interval;
};

DihedralContext make_context(const Dihedral& d, const std::vector<int>& j_set, const Word& c) {
  DihedralContext ctx;
  ctx.top = d.quotient_longest(j_set);
  ctx.order = d.inversion_sequence(d.c_sorting_word(ctx.top, c));
  for (std::size_t i = 0; i < ctx.order.size(); ++i) ctx.position[ctx.order[i]] = static_cast<int>(i);
  for (const auto& x : d.elements()) {
    const auto inv = d.inversion_set(x);
    if (std::all_of(inv.begin(), inv.end(), [&](int r) { return ctx.position.count(r) > 0; }))
      ctx.interval.push_back(x);
  }
  return ctx;
}

// In rank two every root strictly inside the inversion order is a positive
// combination of any earlier and any later one.
bool aligned(const Dihedral& d, const DihedralContext& ctx, const Dihedral::Element& x) {
  const auto inv = d.inversion_set(x);
  const int k = static_cast<int>(ctx.order.size());
  for (int g : d.cover_reflections(x)) {
    const int pg = ctx.position.at(g);
    if (pg == 0 || pg == k - 1) continue;
    for (int a = 0; a < pg; ++a)
      if (!std::binary_search(inv.begin(), inv.end(), ctx.order[static_cast<std::size_t>(a)])) return false;
  }
  return true;
}

}  // namespace

std::vector<Word> dihedral_aligned(int m, const std::vector<int>& j_set, const Word& c) {
  check_args(j_set, c);
  const Dihedral d(m);
  const auto ctx = make_context(d, j_set, c);
  std::vector<Word> out;
  for (const auto& x : ctx.interval)
    if (aligned(d, ctx, x)) out.push_back(d.reduced_word(x, c[0]));
  return out;
}

DihedralCounts dihedral_counts(int m, const std::vector<int>& j_set, const Word& c) {
  check_args(j_set, c);
  const Dihedral d(m);
  const auto ctx = make_context(d, j_set, c);
  DihedralCounts out;

  std::set<std::pair<bool, int>> images;
  for (const auto& x : ctx.interval) {
    if (!aligned(d, ctx, x)) continue;
    ++out.aligned;
    auto covers = d.cover_reflections(x);
    std::sort(covers.begin(), covers.end(),
              [&](int a, int b) { return ctx.position.at(a) < ctx.position.at(b); });
    Dihedral::Element prod = d.identity();
    for (int g : covers) prod = d.multiply(prod, {true, g});
    images.emplace(prod.flip, prod.k);
  }
  out.noncrossing = images.size();

  // Subword complex: states (element, letters used) with length == letters used.
  Word q = c;
  const Word tail = d.c_sorting_word(d.longest(), c);
  q.insert(q.end(), tail.begin(), tail.end());
  std::map<std::pair<std::pair<bool, int>, int>, std::uint64_t> states{{{{false, 0}, 0}, 1}};
  for (int s : q) {
    auto next = states;
    for (const auto& [key, ways] : states) {
      const Dihedral::Element x{key.first.first, key.first.second};
      const Dihedral::Element y = d.multiply(x, d.generator(s));
      if (d.length(y) != key.second + 1) continue;
      next[{{y.flip, y.k}, key.second + 1}] += ways;
    }
    states = std::move(next);
  }
  auto it = states.find({{ctx.top.flip, ctx.top.k}, d.length(ctx.top)});
  out.subword = it == states.end() ? 0 : it->second;

  const auto poset = d.root_poset();
  Bitset filter(static_cast<std::size_t>(m));
  for (int s = 0; s < 2; ++s)
    if (std::find(j_set.begin(), j_set.end(), s) == j_set.end()) filter |= poset.up_set(s == 0 ? 0 : m - 1);
  std::vector<int> keep;
  for (int j = 0; j < m; ++j)
    if (filter.test(static_cast<std::size_t>(j))) keep.push_back(j);
  out.nonnesting = count_ideals(poset.induced(keep));
  return out;
}

}  // namespace parcat
