#include "parcat/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "parcat/errors.hpp"

namespace parcat {

std::size_t RootHash::operator()(const Root& r) const {
  std::size_t h = r.size();
  for (const auto& x : r) h = h * 1000003u ^ x.hash();
  return h;
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Root Matrix::column(int col) const {
  auto first = e_.begin() + static_cast<std::ptrdiff_t>(col * n_);
  return Root(first, first + n_);
}

Root Matrix::apply(const Root& v) const {
  Root out(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    if (v[static_cast<std::size_t>(j)].is_zero()) continue;
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  }
  return out;
}

bool Matrix::column_positive(int col) const {
  for (int i = 0; i < n_; ++i) {
    const int s = at(i, col).sign();
    if (s > 0) return true;
    if (s < 0) return false;
  }
  return false;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const int n = a.n_;
  Matrix m(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Golden& bk = b.at(k, j);
      if (bk.is_zero()) continue;
      for (int i = 0; i < n; ++i) m.at(i, j) += a.at(i, k) * bk;
    }
  return m;
}

std::size_t Matrix::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& x : e_) h = h * 1000003u ^ x.hash();
  return h;
}

namespace {

// M <- M * s_i, touching only the columns linked to i.
void right_mult_simple(const CoxeterSystem& sys, Matrix& m, int i) {
  const int n = sys.rank();
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const Golden& c = sys.cartan(i, j);
    if (c.is_zero()) continue;
    for (int r = 0; r < n; ++r) m.at(r, j) -= c * m.at(r, i);
  }
  for (int r = 0; r < n; ++r) m.at(r, i) = -m.at(r, i);
}

std::vector<std::vector<int>> m_from_cartan(const std::vector<std::vector<Golden>>& c) {
  const std::size_t n = c.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Golden p = c[i][j] * c[j][i];
      if (p == Golden(0)) m[i][j] = 2;
      else if (p == Golden(1)) m[i][j] = 3;
      else if (p == Golden(2)) m[i][j] = 4;
      else if (p == Golden(3)) m[i][j] = 6;
      else if (p == Golden(1, 1)) m[i][j] = 5;
      else if (p.sign() > 0 && !(p < Golden(4))) m[i][j] = 0;
      else throw InvalidInput("unsupported Cartan product " + to_string(p));
    }
  return m;
}

std::string type_letter(CoxeterType t) {
  switch (t) {
    case CoxeterType::A: return "A";
    case CoxeterType::B: return "B";
    case CoxeterType::C: return "C";
    case CoxeterType::D: return "D";
    case CoxeterType::E: return "E";
    case CoxeterType::F: return "F";
    case CoxeterType::G: return "G";
    case CoxeterType::H: return "H";
    case CoxeterType::I: return "I";
    case CoxeterType::AffineA: return "affine-A";
    case CoxeterType::Custom: return "custom";
  }
  return "?";
}

}  // namespace

CoxeterType CoxeterSystem::parse_type(std::string_view text) {
  std::string t;
  for (char ch : text) t += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (t == "A") return CoxeterType::A;
  if (t == "B") return CoxeterType::B;
  if (t == "C") return CoxeterType::C;
  if (t == "D") return CoxeterType::D;
  if (t == "E") return CoxeterType::E;
  if (t == "F") return CoxeterType::F;
  if (t == "G") return CoxeterType::G;
  if (t == "H") return CoxeterType::H;
  if (t == "I") return CoxeterType::I;
  if (t == "AFFINE-A" || t == "AFFINEA" || t == "~A") return CoxeterType::AffineA;
  throw InvalidInput("unknown Coxeter type: " + std::string(text));
}

CoxeterSystem CoxeterSystem::from_cartan(std::string name, std::vector<std::vector<Golden>> cartan, int name_offset,
                                         bool finite) {
  CoxeterSystem s;
  s.name_ = std::move(name);
  s.rank_ = static_cast<int>(cartan.size());
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != s.rank_) throw InvalidInput("Cartan matrix is not square");
  for (int i = 0; i < s.rank_; ++i)
    if (cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != Golden(2))
      throw InvalidInput("Cartan diagonal must be 2");
  s.cartan_ = std::move(cartan);
  s.m_ = m_from_cartan(s.cartan_);
  s.name_offset_ = name_offset;
  s.finite_ = finite;
  for (int i = 0; i < s.rank_; ++i) {
    Matrix m = Matrix::identity(s.rank_);
    right_mult_simple(s, m, i);
    s.simple_.push_back(std::move(m));
  }
  if (finite) {
    // orbit of the simple roots, positive half
    std::deque<Root> queue;
    for (int i = 0; i < s.rank_; ++i) {
      Root r = s.simple_root(i);
      s.root_index_.emplace(r, static_cast<int>(s.positive_.size()));
      s.positive_.push_back(r);
      queue.push_back(std::move(r));
    }
    while (!queue.empty()) {
      Root r = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i < s.rank_; ++i) {
        Root t = s.simple_[static_cast<std::size_t>(i)].apply(r);
        if (!is_positive(t) || s.root_index_.count(t)) continue;
        s.root_index_.emplace(t, static_cast<int>(s.positive_.size()));
        s.positive_.push_back(t);
        queue.push_back(std::move(t));
        if (s.positive_.size() > 100000) throw InvalidInput("root system too large or infinite");
      }
    }
  }
  return s;
}

CoxeterSystem CoxeterSystem::make(CoxeterType type, int rank, int m) {
  if (rank < 1) throw InvalidInput("rank must be positive");
  const std::size_t gens = type == CoxeterType::AffineA ? static_cast<std::size_t>(rank) + 1 : static_cast<std::size_t>(rank);
  std::vector<std::vector<Golden>> c(gens, std::vector<Golden>(gens, Golden(0)));
  for (std::size_t i = 0; i < gens; ++i) c[i][i] = 2;
  auto link = [&](int i, int j, Golden cij, Golden cji) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cij;
    c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cji;
  };
  auto path = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) link(i, i + 1, -1, -1);
  };
  std::string name = type_letter(type) + std::to_string(rank);
  bool finite = true;
  int offset = 1;
  switch (type) {
    case CoxeterType::A:
      path(rank);
      break;
    case CoxeterType::B:
    case CoxeterType::C:
      if (rank < 2) throw InvalidInput("type B/C needs rank >= 2");
      path(rank - 1);
      // last simple root short in B, long in C
      if (type == CoxeterType::B) link(rank - 2, rank - 1, -1, -2);
      else link(rank - 2, rank - 1, -2, -1);
      break;
    case CoxeterType::D:
      if (rank < 4) throw InvalidInput("type D needs rank >= 4");
      path(rank - 1);
      link(rank - 3, rank - 1, -1, -1);
      break;
    case CoxeterType::E:
      if (rank < 6 || rank > 8) throw InvalidInput("type E needs rank 6, 7 or 8");
      link(0, 2, -1, -1);
      link(1, 3, -1, -1);
      for (int i = 2; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
      break;
    case CoxeterType::F:
      if (rank != 4) throw InvalidInput("type F needs rank 4");
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      break;
    case CoxeterType::G:
      if (rank != 2) throw InvalidInput("type G needs rank 2");
      link(0, 1, -1, -3);
      break;
    case CoxeterType::H:
      if (rank != 3 && rank != 4) throw InvalidInput("type H needs rank 3 or 4");
      path(rank);
      link(0, 1, Golden(0, -1), Golden(0, -1));
      break;
    case CoxeterType::I:
      if (rank != 2) throw InvalidInput("type I needs rank 2");
      name = "I2(" + (m == 0 ? std::string("inf") : std::to_string(m)) + ")";
      switch (m) {
        case 2: break;
        case 3: link(0, 1, -1, -1); break;
        case 4: link(0, 1, -1, -2); break;
        case 5: link(0, 1, Golden(0, -1), Golden(0, -1)); break;
        case 6: link(0, 1, -1, -3); break;
        case 0: link(0, 1, -2, -2); finite = false; break;
        default: throw InvalidInput("I2(m) with m outside {2,3,4,5,6,inf} needs the dihedral module");
      }
      break;
    case CoxeterType::AffineA:
      if (rank == 1) {
        link(0, 1, -2, -2);
      } else {
        path(rank + 1);
        link(rank, 0, -1, -1);
      }
      finite = false;
      offset = 0;
      break;
    case CoxeterType::Custom:
      throw InvalidInput("custom systems are built from a Cartan matrix");
  }
  auto s = from_cartan(name, std::move(c), offset, finite);
  s.type_ = type;
  return s;
}

bool CoxeterSystem::is_crystallographic() const {
  for (const auto& row : cartan_)
    for (const auto& x : row)
      if (!x.is_integer()) return false;
  return true;
}

Root CoxeterSystem::simple_root(int i) const {
  Root r(static_cast<std::size_t>(rank_));
  r[static_cast<std::size_t>(i)] = 1;
  return r;
}

const std::vector<Root>& CoxeterSystem::positive_roots() const {
  if (!finite_) throw InvalidInput(name_ + " is infinite");
  return positive_;
}

int CoxeterSystem::root_index(const Root& r) const {
  auto it = root_index_.find(r);
  return it == root_index_.end() ? -1 : it->second;
}

bool is_positive(const Root& r) {
  bool nonzero = false;
  for (const auto& x : r) {
    const int s = x.sign();
    if (s < 0) return false;
    nonzero |= s > 0;
  }
  return nonzero;
}

bool is_negative(const Root& r) { return is_positive(negate(r)); }

Root negate(const Root& r) {
  Root out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
  return out;
}

std::string to_string(const Root& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += to_string(r[i]);
  }
  return s + "]";
}

Root parse_root(std::string_view text) {
  auto open = text.find('['), close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw InvalidInput("root must be bracketed: " + std::string(text));
  Root r;
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    auto piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    r.push_back(parse_golden(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return r;
}

Matrix simple_reflection_matrix(const CoxeterSystem& sys, int i) {
  if (i < 0 || i >= sys.rank()) throw InvalidInput("generator index out of range");
  return sys.simple(i);
}

GroupElement identity_element(const CoxeterSystem& sys) { return {Matrix::identity(sys.rank()), {}}; }

Matrix word_matrix(const CoxeterSystem& sys, const Word& word) {
  Matrix m = Matrix::identity(sys.rank());
  for (int a : word) {
    if (a < 0 || a >= sys.rank()) throw InvalidInput("generator index out of range");
    right_mult_simple(sys, m, a);
  }
  return m;
}

GroupElement element_from_matrix(const CoxeterSystem& sys, const Matrix& m) {
  Matrix cur = m;
  Word rev;
  const int n = sys.rank();
  for (;;) {
    int d = -1;
    for (int i = 0; i < n && d < 0; ++i)
      if (!cur.column_positive(i)) d = i;
    if (d < 0) break;
    right_mult_simple(sys, cur, d);
    rev.push_back(d);
    if (rev.size() > 100000) throw InvariantViolation("descent peeling does not terminate");
  }
  if (!(cur == Matrix::identity(n))) throw InvalidInput("matrix is not a group element");
  std::reverse(rev.begin(), rev.end());
  return {m, std::move(rev)};
}

GroupElement element_from_word(const CoxeterSystem& sys, const Word& word) {
  Matrix m = word_matrix(sys, word);
  if (is_reduced(sys, word)) return {std::move(m), word};
  return element_from_matrix(sys, m);
}

GroupElement multiply(const CoxeterSystem& sys, const GroupElement& u, const GroupElement& v) {
  Word w = u.word();
  w.insert(w.end(), v.word().begin(), v.word().end());
  return element_from_word(sys, w);
}

GroupElement inverse(const CoxeterSystem& sys, const GroupElement& w) {
  Word r(w.word().rbegin(), w.word().rend());
  return {word_matrix(sys, r), r};
}

GroupElement times_simple(const CoxeterSystem& sys, const GroupElement& w, int i) {
  Matrix m = w.matrix();
  const bool ascent = m.column_positive(i);
  right_mult_simple(sys, m, i);
  if (ascent) {
    Word word = w.word();
    word.push_back(i);
    return {std::move(m), std::move(word)};
  }
  return element_from_matrix(sys, m);
}

bool is_reduced(const CoxeterSystem& sys, const Word& word) {
  Matrix m = Matrix::identity(sys.rank());
  for (int a : word) {
    if (a < 0 || a >= sys.rank()) throw InvalidInput("generator index out of range");
    if (!m.column_positive(a)) return false;
    right_mult_simple(sys, m, a);
  }
  return true;
}

std::vector<int> right_descents(const CoxeterSystem& sys, const GroupElement& w) {
  std::vector<int> d;
  for (int i = 0; i < sys.rank(); ++i)
    if (!w.matrix().column_positive(i)) d.push_back(i);
  return d;
}

std::vector<int> left_descents(const CoxeterSystem& sys, const GroupElement& w) {
  return right_descents(sys, inverse(sys, w));
}

std::vector<Root> inversion_sequence(const CoxeterSystem& sys, const Word& word) {
  Matrix m = Matrix::identity(sys.rank());
  std::vector<Root> out;
  out.reserve(word.size());
  for (int a : word) {
    if (a < 0 || a >= sys.rank()) throw InvalidInput("generator index out of range");
    Root r = m.column(a);
    if (!is_positive(r)) throw InvalidInput("word is not reduced: " + format_word(sys, word));
    out.push_back(std::move(r));
    right_mult_simple(sys, m, a);
  }
  return out;
}

std::vector<Root> left_inversion_set(const CoxeterSystem& sys, const GroupElement& w) {
  return inversion_sequence(sys, w.word());
}

std::vector<Root> cover_reflections(const CoxeterSystem& sys, const GroupElement& w) {
  std::vector<Root> out;
  for (int i : right_descents(sys, w)) out.push_back(negate(w.matrix().column(i)));
  return out;
}

bool weak_leq(const CoxeterSystem& sys, const GroupElement& u, const GroupElement& v) {
  if (u.length() > v.length()) return false;
  auto iv = inversion_sequence(sys, v.word());
  std::unordered_set<Root, RootHash> set(iv.begin(), iv.end());
  for (const auto& r : inversion_sequence(sys, u.word()))
    if (!set.count(r)) return false;
  return true;
}

Word c_sorting_word(const CoxeterSystem& sys, const GroupElement& w, const Word& c_word) {
  if (c_word.empty() && w.length() > 0) throw InvalidInput("empty Coxeter word");
  Matrix rest_inv = inverse(sys, w).matrix();  // inverse of the unsorted remainder
  Word out;
  int remaining = w.length();
  while (remaining > 0) {
    bool took = false;
    for (int s : c_word) {
      if (remaining == 0) break;
      if (!rest_inv.column_positive(s)) {
        out.push_back(s);
        right_mult_simple(sys, rest_inv, s);
        --remaining;
        took = true;
      }
    }
    if (!took) throw InvalidInput("element is not expressible in the given Coxeter word");
  }
  return out;
}

GroupElement longest_element(const CoxeterSystem& sys) {
  if (!sys.is_finite()) throw InvalidInput(sys.name() + " has no longest element");
  Matrix m = Matrix::identity(sys.rank());
  Word word;
  for (;;) {
    int a = -1;
    for (int i = 0; i < sys.rank() && a < 0; ++i)
      if (m.column_positive(i)) a = i;
    if (a < 0) break;
    right_mult_simple(sys, m, a);
    word.push_back(a);
  }
  return {std::move(m), std::move(word)};
}

GroupElement quotient_min_rep(const CoxeterSystem& sys, const GroupElement& w, const std::vector<int>& j_set) {
  for (int j : j_set)
    if (j < 0 || j >= sys.rank()) throw InvalidInput("J contains an unknown generator");
  // strip right descents of w^{-1} lying in J
  Word inv(w.word().rbegin(), w.word().rend());
  Matrix m = word_matrix(sys, inv);
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : j_set)
      if (!m.column_positive(j)) {
        right_mult_simple(sys, m, j);
        changed = true;
      }
  }
  return inverse(sys, element_from_matrix(sys, m));
}

GroupElement quotient_longest_element(const CoxeterSystem& sys, const std::vector<int>& j_set) {
  return quotient_min_rep(sys, longest_element(sys), j_set);
}

int WeakInterval::index_of(const Bitset& inv) const {
  auto it = by_inversions.find(inv);
  return it == by_inversions.end() ? -1 : it->second;
}

WeakInterval enumerate_weak_interval(const CoxeterSystem& sys, const Word& reduced_word) {
  WeakInterval iv;
  iv.base_word = reduced_word;
  iv.roots = inversion_sequence(sys, reduced_word);
  iv.top = GroupElement(word_matrix(sys, reduced_word), reduced_word);
  for (std::size_t k = 0; k < iv.roots.size(); ++k) iv.root_index.emplace(iv.roots[k], static_cast<int>(k));
  const std::size_t k = iv.roots.size();
  iv.elements.push_back(identity_element(sys));
  iv.inversions.emplace_back(k);
  iv.covers.emplace_back();
  iv.by_inversions.emplace(iv.inversions[0], 0);
  for (std::size_t x = 0; x < iv.elements.size(); ++x) {
    for (int s = 0; s < sys.rank(); ++s) {
      const Matrix& mx = iv.elements[x].matrix();
      if (!mx.column_positive(s)) continue;
      auto it = iv.root_index.find(mx.column(s));
      if (it == iv.root_index.end()) continue;
      Bitset inv = iv.inversions[x];
      inv.set(static_cast<std::size_t>(it->second));
      int child = iv.index_of(inv);
      if (child < 0) {
        child = static_cast<int>(iv.elements.size());
        Matrix m = mx;
        right_mult_simple(sys, m, s);
        Word w = iv.elements[x].word();
        w.push_back(s);
        iv.elements.emplace_back(std::move(m), std::move(w));
        iv.inversions.push_back(inv);
        iv.covers.emplace_back();
        iv.by_inversions.emplace(std::move(inv), child);
      }
      iv.covers[static_cast<std::size_t>(child)].push_back(it->second);
      iv.edges.emplace_back(static_cast<int>(x), child);
    }
  }
  for (auto& c : iv.covers) std::sort(c.begin(), c.end());
  return iv;
}

std::vector<GroupElement> enumerate_parabolic_quotient(const CoxeterSystem& sys, const std::vector<int>& j_set) {
  return enumerate_weak_interval(sys, quotient_longest_element(sys, j_set).word()).elements;
}

FinitePoset interval_poset(const CoxeterSystem& sys, const WeakInterval& iv, const std::vector<int>& subset) {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (int x : subset) labels.push_back(format_word(sys, iv.elements[static_cast<std::size_t>(x)].word()));
  return from_relation(
      static_cast<int>(subset.size()),
      [&](int a, int b) {
        return iv.inversions[static_cast<std::size_t>(subset[static_cast<std::size_t>(a)])].is_subset_of(
            iv.inversions[static_cast<std::size_t>(subset[static_cast<std::size_t>(b)])]);
      },
      labels);
}

std::optional<std::pair<GoldenFraction, GoldenFraction>> solve_two_root_combination(const Root& gamma,
                                                                                   const Root& alpha,
                                                                                   const Root& beta) {
  const std::size_t n = gamma.size();
  if (alpha.size() != n || beta.size() != n) throw InvalidInput("root dimension mismatch");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const Golden det = alpha[p] * beta[q] - alpha[q] * beta[p];
      if (det.is_zero()) continue;
      // Cramer: a = an/det, b = bn/det
      const Golden an = gamma[p] * beta[q] - gamma[q] * beta[p];
      const Golden bn = alpha[p] * gamma[q] - alpha[q] * gamma[p];
      for (std::size_t r = 0; r < n; ++r)
        if (!(det * gamma[r] == an * alpha[r] + bn * beta[r])) return std::nullopt;
      const int ds = det.sign();
      if (an.sign() * ds <= 0 || bn.sign() * ds <= 0) return std::nullopt;
      return std::make_pair(GoldenFraction(an) / GoldenFraction(det), GoldenFraction(bn) / GoldenFraction(det));
    }
  throw InvalidInput("roots are linearly dependent");
}

bool is_coxeter_word(const CoxeterSystem& sys, const Word& c_word) {
  Word sorted = c_word;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) != sys.rank()) return false;
  for (int i = 0; i < sys.rank(); ++i)
    if (sorted[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::vector<Word> coxeter_elements(const CoxeterSystem& sys) {
  Word perm(static_cast<std::size_t>(sys.rank()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Word> out;
  std::unordered_set<Matrix, MatrixHash> seen;
  do {
    if (seen.insert(word_matrix(sys, perm)).second) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool is_fully_commutative(const CoxeterSystem& sys, const Word& reduced_word) {
  if (!is_reduced(sys, reduced_word)) throw InvalidInput("word is not reduced");
  auto has_braid = [&](const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const int a = w[i], b = w[i + 1];
      const int m = sys.coxeter_m(a, b);
      if (a == b || m == 2) continue;
      if (m == 0) continue;
      std::size_t len = 2;
      while (i + len < w.size() && w[i + len] == (len % 2 ? b : a)) ++len;
      if (static_cast<int>(len) >= m) return true;
    }
    return false;
  };
  std::set<Word> seen{reduced_word};
  std::deque<Word> queue{reduced_word};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (has_braid(w)) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] != w[i + 1] && sys.coxeter_m(w[i], w[i + 1]) == 2) {
        Word v = w;
        std::swap(v[i], v[i + 1]);
        if (seen.insert(v).second) queue.push_back(std::move(v));
      }
    if (seen.size() > 2000000) throw InvalidInput("commutation class too large");
  }
  return true;
}

Word parse_word(const CoxeterSystem& sys, std::string_view text, int offset) {
  if (offset < 0) offset = sys.name_offset();
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '*' || ch == '.') {
      ++i;
      continue;
    }
    if (ch == 's' || ch == 'S') ++i;
    if (text.substr(i) == "e" && w.empty()) break;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw InvalidInput("bad word syntax: " + std::string(text));
    const int idx = std::stoi(std::string(text.substr(i, j - i))) - offset;
    if (idx < 0 || idx >= sys.rank()) throw InvalidInput("generator out of range in: " + std::string(text));
    w.push_back(idx);
    i = j;
  }
  return w;
}

std::string format_word(const CoxeterSystem& sys, const Word& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(word[i] + sys.name_offset());
  }
  return s;
}

Permutation to_permutation(const CoxeterSystem& sys, const GroupElement& w) {
  if (sys.type() != CoxeterType::A) throw InvalidInput("permutation view needs type A");
  std::vector<int> v(static_cast<std::size_t>(sys.rank() + 1));
  std::iota(v.begin(), v.end(), 1);
  for (int a : w.word()) std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(a + 1)]);
  return Permutation(v);
}

GroupElement from_permutation(const CoxeterSystem& sys, const Permutation& p) {
  if (sys.type() != CoxeterType::A || p.size() != sys.rank() + 1) throw InvalidInput("permutation size mismatch");
  std::vector<int> v = p.values();
  Word rev;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        rev.push_back(static_cast<int>(i));
        changed = true;
      }
  }
  std::reverse(rev.begin(), rev.end());
  return {word_matrix(sys, rev), rev};
}

}  // namespace parcat
