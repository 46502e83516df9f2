#include <algorithm>
#include <numeric>
#include <sstream>

#include "parcat/alignment.hpp"
#include "parcat/errors.hpp"

namespace parcat {

namespace {

std::vector<std::string> root_labels(const std::vector<Root>& roots) {
  std::vector<std::string> out;
  for (const auto& r : roots) out.push_back(to_string(r));
  return out;
}

// beta - alpha has nonnegative coordinates
FinitePoset coordinate_order(const std::vector<Root>& roots) {
  return from_relation(
      static_cast<int>(roots.size()),
      [&](int a, int b) {
        const auto& ra = roots[static_cast<std::size_t>(a)];
        const auto& rb = roots[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < ra.size(); ++i)
          if ((rb[i] - ra[i]).sign() < 0) return false;
        return true;
      },
      root_labels(roots));
}

Golden height(const Root& r) {
  Golden h;
  for (const auto& x : r) h += x;
  return h;
}

// Two simple roots at the bottom, every other root in one chain above them.
FinitePoset dihedral_order(const std::vector<Root>& roots) {
  std::vector<int> rest;
  for (int i = 0; i < static_cast<int>(roots.size()); ++i)
    if (i > 1) rest.push_back(i);
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
    return height(roots[static_cast<std::size_t>(a)]) < height(roots[static_cast<std::size_t>(b)]);
  });
  std::vector<std::pair<int, int>> edges;
  if (!rest.empty()) {
    edges.emplace_back(0, rest[0]);
    edges.emplace_back(1, rest[0]);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) edges.emplace_back(rest[i], rest[i + 1]);
  }
  return FinitePoset::from_covers(static_cast<int>(roots.size()), edges, root_labels(roots));
}

// H3: graded, rank sizes 3,2,2,2,2,1,1,1,1.
const char* const kH3Poset = R"(roots: [1,0,0] [0,1,0] [0,0,1] [1,1p,0] [0,1,1] [1,1p,1p] [1p,1,0] [1p,1,1] [1p,1p,0] [1p,1p,1p] [1p,1+1p,1] [1p,1+1p,1p] [1+1p,1+1p,1] [1+1p,1+1p,1p] [1+1p,2p,1p]
0 < 3
1 < 3
1 < 4
2 < 4
3 < 5
3 < 6
4 < 5
5 < 7
6 < 7
6 < 8
7 < 9
7 < 10
8 < 9
9 < 11
10 < 11
11 < 12
12 < 13
13 < 14
)";

}  // namespace

FinitePoset root_poset(const CoxeterSystem& sys) { return builtin_root_poset(sys).poset; }

RootPosetData builtin_root_poset(const CoxeterSystem& sys) {
  if (!sys.is_finite()) throw InvalidInput("root posets need a finite system");
  const auto& roots = sys.positive_roots();
  if (sys.type() == CoxeterType::I) return {roots, dihedral_order(roots)};
  if (sys.is_crystallographic()) return {roots, coordinate_order(roots)};
  if (sys.type() == CoxeterType::H && sys.rank() == 3) return parse_root_poset(sys, kH3Poset);
  throw InvalidInput(sys.name() + " has no built-in root poset; supply one with a root-poset file");
}

RootPosetData parse_root_poset(const CoxeterSystem& sys, const std::string& text) {
  RootPosetData data;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  bool have_roots = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (auto pos = line.find("roots:"); pos != std::string::npos) {
      std::string rest = line.substr(pos + 6);
      std::size_t i = 0;
      while ((i = rest.find('[', i)) != std::string::npos) {
        auto j = rest.find(']', i);
        if (j == std::string::npos) throw InvalidInput("unterminated root on line " + std::to_string(line_no));
        Root r = parse_root(rest.substr(i, j - i + 1));
        if (static_cast<int>(r.size()) != sys.rank())
          throw InvalidInput("root dimension differs from the rank on line " + std::to_string(line_no));
        data.roots.push_back(std::move(r));
        i = j + 1;
      }
      have_roots = true;
      continue;
    }
    if (!have_roots) throw InvalidInput("root-poset file must start with a 'roots:' line");
    auto lt = line.find('<');
    if (lt == std::string::npos) throw InvalidInput("expected 'i < j' on line " + std::to_string(line_no));
    int a = 0, b = 0;
    try {
      a = std::stoi(line.substr(0, lt));
      b = std::stoi(line.substr(lt + 1));
    } catch (const std::exception&) {
      throw InvalidInput("bad cover line " + std::to_string(line_no));
    }
    const int n = static_cast<int>(data.roots.size());
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidInput("root index out of range on line " + std::to_string(line_no));
    edges.emplace_back(a, b);
  }
  for (int i = 0; i < sys.rank(); ++i)
    if (std::find(data.roots.begin(), data.roots.end(), sys.simple_root(i)) == data.roots.end())
      throw InvalidInput("root-poset file is missing simple root " + std::to_string(i + sys.name_offset()));
  if (sys.is_finite()) {
    std::vector<char> seen(sys.positive_roots().size(), 0);
    for (const auto& r : data.roots) {
      const int k = sys.root_index(r);
      if (k < 0) throw InvalidInput("not a positive root of " + sys.name() + ": " + to_string(r));
      if (seen[static_cast<std::size_t>(k)]++) throw InvalidInput("root listed twice: " + to_string(r));
    }
    if (data.roots.size() != seen.size())
      throw InvalidInput("root-poset file lists " + std::to_string(data.roots.size()) + " of the " +
                         std::to_string(seen.size()) + " positive roots");
  }
  try {
    data.poset = FinitePoset::from_covers(static_cast<int>(data.roots.size()), edges, root_labels(data.roots));
  } catch (const PosetAxiomError& e) {
    throw InvalidInput(std::string("root-poset file has a cycle: ") + e.what());
  }
  return data;
}

std::string format_root_poset(const RootPosetData& data) {
  std::string s = "roots:";
  for (const auto& r : data.roots) s += " " + to_string(r);
  s += "\n";
  for (auto [a, b] : data.poset.covers()) s += std::to_string(a) + " < " + std::to_string(b) + "\n";
  return s;
}

FinitePoset parabolic_root_filter(const RootPosetData& data, const std::vector<int>& j_set) {
  const std::size_t rank = data.roots.empty() ? 0 : data.roots[0].size();
  Bitset filter(data.roots.size());
  for (std::size_t i = 0; i < rank; ++i) {
    if (std::find(j_set.begin(), j_set.end(), static_cast<int>(i)) != j_set.end()) continue;
    Root simple(rank);
    simple[i] = 1;
    auto it = std::find(data.roots.begin(), data.roots.end(), simple);
    if (it == data.roots.end()) throw InvalidInput("root poset is missing a simple root");
    filter |= data.poset.up_set(static_cast<int>(it - data.roots.begin()));
  }
  return data.poset.induced([&] {
    std::vector<int> v;
    for (std::size_t i = 0; i < data.roots.size(); ++i)
      if (filter.test(i)) v.push_back(static_cast<int>(i));
    return v;
  }());
}

std::uint64_t nonnesting_count(const RootPosetData& data, const std::vector<int>& j_set) {
  return count_ideals(parabolic_root_filter(data, j_set));
}

std::uint64_t nonnesting_count(const CoxeterSystem& sys, const std::vector<int>& j_set) {
  return nonnesting_count(builtin_root_poset(sys), j_set);
}

}  // namespace parcat
