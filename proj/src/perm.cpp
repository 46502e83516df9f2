#include "parcat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "parcat/errors.hpp"

namespace parcat {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw InvalidInput("not a permutation of [n]: value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::string cleaned;
  bool separated = false;
  for (char ch : text) {
    if (ch == '|') ch = ' ';
    if (ch == ',') ch = ' ';
    cleaned.push_back(ch);
  }
  // Bars alone do not imply multi-digit tokens: "4|23|1" is digit-wise.
  {
    std::string orig(text);
    std::istringstream probe(orig);
    std::string tok;
    int tokens = 0;
    while (probe >> tok) ++tokens;
    separated = tokens > 1;
  }
  std::vector<int> values;
  if (separated) {
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw InvalidInput("bad token");
        values.push_back(v);
      } catch (const std::exception&) {
        throw InvalidInput("bad permutation token '" + tok + "'");
      }
    }
  } else {
    for (char ch : cleaned) {
      if (ch == ' ') continue;
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw InvalidInput(std::string("bad permutation character '") + ch + "'");
      values.push_back(ch - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::with_swapped_positions(int i, int j) const {
  Permutation r(*this);
  std::swap(r.values_[static_cast<std::size_t>(i - 1)], r.values_[static_cast<std::size_t>(j - 1)]);
  return r;
}

Permutation Permutation::compose(const Permutation& o) const {
  if (o.size() != size()) throw InvalidInput("size mismatch in compose");
  std::vector<int> r(values_.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    r[x] = values_[static_cast<std::size_t>(o.values_[x] - 1)];
  return Permutation(std::move(r));
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.values()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}

std::size_t InversionSet::rank(int n, int i, int j) {
  // pairs (a, *) for a < i come first
  const auto a = static_cast<std::size_t>(i - 1);
  const auto nn = static_cast<std::size_t>(n);
  return a * nn - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::vector<PosPair> InversionSet::pairs() const {
  std::vector<PosPair> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  return out;
}

InversionSet inversion_set(const Permutation& w) {
  const int n = w.size();
  InversionSet inv(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) inv.insert(i, j);
  return inv;
}

Permutation permutation_from_inversions(const InversionSet& inv) {
  const int n = inv.n();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int below = 0;
    for (int j = 1; j < i; ++j)
      if (!inv.contains(j, i)) ++below;
    for (int j = i + 1; j <= n; ++j)
      if (inv.contains(i, j)) ++below;
    v[static_cast<std::size_t>(i - 1)] = below + 1;
  }
  Permutation w(std::move(v));
  if (!(inversion_set(w) == inv)) throw InvalidInput("pair set is not an inversion set");
  return w;
}

bool weak_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InvalidInput("weak_leq: size mismatch");
  return inversion_set(u).is_subset_of(inversion_set(v));
}

std::vector<Permutation> lower_covers(const Permutation& w) {
  std::vector<Permutation> out;
  const auto inv = w.inverse();
  // swap the positions of values a+1 and a when a+1 stands first
  for (int a = 1; a < w.size(); ++a) {
    int p = inv(a + 1), q = inv(a);
    if (p < q) out.push_back(w.with_swapped_positions(p, q));
  }
  return out;
}

std::vector<Permutation> upper_covers(const Permutation& w) {
  std::vector<Permutation> out;
  const auto inv = w.inverse();
  for (int a = 1; a < w.size(); ++a) {
    int p = inv(a), q = inv(a + 1);
    if (p < q) out.push_back(w.with_swapped_positions(p, q));
  }
  return out;
}

std::vector<PosPair> descent_pairs(const Permutation& w) {
  std::vector<PosPair> out;
  const auto inv = w.inverse();
  for (int a = 1; a < w.size(); ++a) {
    int p = inv(a + 1), q = inv(a);
    if (p < q) out.emplace_back(p, q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Transitive closure of a forward relation given as a pair set.
InversionSet forward_closure(const InversionSet& rel) {
  const int n = rel.n();
  std::vector<Bitset> reach(static_cast<std::size_t>(n) + 1, Bitset(static_cast<std::size_t>(n) + 1));
  for (int i = n; i >= 1; --i) {
    auto& r = reach[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= n; ++j)
      if (rel.contains(i, j)) {
        r.set(static_cast<std::size_t>(j));
        r |= reach[static_cast<std::size_t>(j)];
      }
  }
  InversionSet out(n);
  for (int i = 1; i <= n; ++i)
    reach[static_cast<std::size_t>(i)].for_each([&](std::size_t j) { out.insert(i, static_cast<int>(j)); });
  return out;
}

InversionSet complement_pairs(const InversionSet& s) {
  InversionSet out(s.n());
  for (int i = 1; i <= s.n(); ++i)
    for (int j = i + 1; j <= s.n(); ++j)
      if (!s.contains(i, j)) out.insert(i, j);
  return out;
}

InversionSet pair_union(const InversionSet& a, const InversionSet& b) {
  InversionSet out(a.n());
  for (int i = 1; i <= a.n(); ++i)
    for (int j = i + 1; j <= a.n(); ++j)
      if (a.contains(i, j) || b.contains(i, j)) out.insert(i, j);
  return out;
}

}  // namespace

Permutation weak_join(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InvalidInput("weak_join: size mismatch");
  return permutation_from_inversions(forward_closure(pair_union(inversion_set(u), inversion_set(v))));
}

Permutation weak_meet(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InvalidInput("weak_meet: size mismatch");
  auto non = forward_closure(
      pair_union(complement_pairs(inversion_set(u)), complement_pairs(inversion_set(v))));
  return permutation_from_inversions(complement_pairs(non));
}

JContext::JContext(int n, std::vector<int> j_set) : n_(n), j_set_(std::move(j_set)) {
  if (n < 1) throw InvalidInput("n must be positive");
  std::sort(j_set_.begin(), j_set_.end());
  j_set_.erase(std::unique(j_set_.begin(), j_set_.end()), j_set_.end());
  for (int j : j_set_)
    if (j < 1 || j > n - 1)
      throw InvalidInput("J index " + std::to_string(j) + " outside 1.." + std::to_string(n - 1));
  region_of_.assign(static_cast<std::size_t>(n), 0);
  int start = 1;
  for (int i = 1; i <= n; ++i) {
    region_of_[static_cast<std::size_t>(i - 1)] = static_cast<int>(regions_.size());
    if (i == n || !in_j(i)) {
      regions_.emplace_back(start, i);
      start = i + 1;
    }
  }
}

bool JContext::in_j(int i) const { return std::binary_search(j_set_.begin(), j_set_.end(), i); }

std::string JContext::format(const Permutation& w) const {
  const bool wide = w.size() >= 10;
  std::string out;
  for (int r = 0; r < region_count(); ++r) {
    if (r) out += wide ? " | " : "|";
    for (int p = regions_[static_cast<std::size_t>(r)].first; p <= regions_[static_cast<std::size_t>(r)].second; ++p) {
      if (wide && p != regions_[static_cast<std::size_t>(r)].first) out += ' ';
      out += std::to_string(w(p));
    }
  }
  return out;
}

std::string JContext::describe() const {
  std::string out = "{";
  for (std::size_t k = 0; k < j_set_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(j_set_[k]);
  }
  return out + "}";
}

JContext j_regions(int n, const std::vector<int>& j_set) { return JContext(n, j_set); }

std::vector<int> parse_j_list(std::string_view text) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::string t = tok;
    tok.clear();
    if (t == "{}" || t == "-") return;
    if (t[0] == 's' || t[0] == 'S') t = t.substr(1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad J token '" + t + "'");
    }
    if (used != t.size()) throw InvalidInput("bad J token '" + t + "'");
    out.push_back(v);
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') {
      flush();
    } else {
      tok.push_back(ch);
    }
  }
  flush();
  return out;
}

std::vector<std::vector<int>> all_j_subsets(int n) {
  std::vector<std::vector<int>> out;
  const int m = std::max(0, n - 1);
  for (int k = 0; k <= m; ++k) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      for (int i = start; i <= m; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
  }
  return out;
}

bool is_quotient_member(const Permutation& w, const JContext& ctx) {
  if (w.size() != ctx.n()) throw InvalidInput("permutation size differs from context n");
  for (int i = 1; i < w.size(); ++i)
    if (ctx.in_j(i) && w(i) > w(i + 1)) return false;
  return true;
}

std::vector<Permutation> enumerate_quotient(const JContext& ctx) {
  const int n = ctx.n();
  std::vector<Permutation> out;
  std::vector<int> line(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  const auto& regions = ctx.regions();
  // region r picks an increasing subset of unused values, lexicographically
  auto fill = [&](auto&& self, std::size_t r, int pos, int min_value) -> void {
    if (r == regions.size()) {
      out.emplace_back(line);
      return;
    }
    const int last = regions[r].second;
    if (pos > last) {
      self(self, r + 1, last + 1, 1);
      return;
    }
    for (int v = min_value; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      line[static_cast<std::size_t>(pos - 1)] = v;
      self(self, r, pos + 1, v + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  fill(fill, 0, 1, 1);
  return out;
}

Permutation quotient_longest(const JContext& ctx) {
  std::vector<int> line(static_cast<std::size_t>(ctx.n()));
  int top = ctx.n();
  for (const auto& [first, last] : ctx.regions()) {
    int size = last - first + 1;
    int lo = top - size + 1;
    for (int p = first; p <= last; ++p) line[static_cast<std::size_t>(p - 1)] = lo + (p - first);
    top -= size;
  }
  return Permutation(std::move(line));
}

unsigned long long quotient_size(const JContext& ctx) {
  // multinomial via successive binomials
  unsigned long long result = 1;
  int placed = 0;
  for (const auto& [first, last] : ctx.regions()) {
    int k = last - first + 1;
    unsigned long long b = 1;
    for (int t = 1; t <= k; ++t) b = b * static_cast<unsigned long long>(placed + t) / static_cast<unsigned long long>(t);
    result *= b;
    placed += k;
  }
  return result;
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool wide = w.size() >= 10;
  for (int i = 1; i <= w.size(); ++i) {
    if (wide && i > 1) out += ' ';
    out += std::to_string(w(i));
  }
  return out;
}

}  // namespace parcat
