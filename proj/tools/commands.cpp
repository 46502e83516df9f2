#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "parcat/alignment.hpp"
#include "parcat/coxeter.hpp"
#include "parcat/dihedral.hpp"
#include "parcat/errors.hpp"
#include "parcat/partitions.hpp"
#include "parcat/perm.hpp"
#include "parcat/poset.hpp"
#include "parcat/subword.hpp"
#include "parcat/tables.hpp"
#include "parcat/tamari.hpp"

namespace parcat::cli {

namespace {

enum class Format { Human, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "human") return Format::Human;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw InvalidInput("unknown output format: " + s);
}

struct Report {
  std::string command;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  bool ok = true;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void emit(const Report& r, Format fmt, std::ostream& out) {
  if (fmt == Format::Csv) {
    for (std::size_t i = 0; i < r.header.size(); ++i) out << (i ? "," : "") << csv_field(r.header[i]);
    out << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    return;
  }
  if (fmt == Format::Json) {
    nlohmann::ordered_json doc;
    doc["command"] = r.command;
    doc["status"] = r.ok ? "pass" : "fail";
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size() && i < r.header.size(); ++i) {
        if (all_digits(row[i])) obj[r.header[i]] = std::stoull(row[i]);
        else obj[r.header[i]] = row[i];
      }
      doc["rows"].push_back(std::move(obj));
    }
    doc["notes"] = r.notes;
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::size_t> width(r.header.size(), 0);
  for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      std::string c = cells[i];
      if (i + 1 < cells.size()) c.resize(width[i], ' ');
      s += (i ? "  " : "") + c;
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  if (!r.header.empty()) {
    line(r.header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
  }
  for (const auto& row : r.rows) line(row);
  for (const auto& n : r.notes) out << n << '\n';
  out << (r.ok ? "PASS" : "FAIL") << '\n';
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string format_j(const std::vector<int>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + std::string("s") + std::to_string(names[i]);
  return s + "}";
}

std::string yes_no(bool b) { return b ? "pass" : "fail"; }

// Common system flags.
struct SystemFlags {
  std::string type = "A";
  int rank = 0;
  int m = 0;
  int word_offset = -1;

  void add(CLI::App* sub) {
    sub->add_option("--type", type, "A, B, D, E, F, H, I or affine-A; a trailing rank is allowed (H3)");
    sub->add_option("--rank", rank, "rank (affine-A: number of generators minus one)");
    sub->add_option("--m", m, "order of s1 s2 for type I");
    sub->add_option("--word-offset", word_offset, "index of the first generator in words and J (default 1, affine 0)");
  }

  // Splits "H3" into type and rank.
  std::pair<CoxeterType, int> resolve() const {
    std::string t = type;
    int r = rank;
    std::size_t cut = t.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(t[cut - 1]))) --cut;
    if (cut < t.size() && cut > 0 && t[cut - 1] != '-') {
      const int tr = std::stoi(t.substr(cut));
      if (r != 0 && r != tr) throw InvalidInput("--type " + type + " contradicts --rank");
      r = tr;
      t = t.substr(0, cut);
    }
    const auto ct = CoxeterSystem::parse_type(t);
    if (ct == CoxeterType::I) r = 2;
    if (r <= 0) throw InvalidInput("missing --rank");
    return {ct, r};
  }

  bool is_dihedral() const { return resolve().first == CoxeterType::I; }

  CoxeterSystem make() const {
    auto [ct, r] = resolve();
    if (ct == CoxeterType::I && m < 2) throw InvalidInput("type I needs --m >= 2");
    return CoxeterSystem::make(ct, r, m);
  }

  int offset(const CoxeterSystem& sys) const { return word_offset >= 0 ? word_offset : sys.name_offset(); }
};

std::vector<int> j_indices(const std::string& text, int offset, int rank) {
  std::vector<int> out;
  for (int v : parse_j_list(text)) {
    const int idx = v - offset;
    if (idx < 0 || idx >= rank) throw InvalidInput("J contains s" + std::to_string(v) + ", outside the generators");
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word linear_c(int rank) {
  Word c;
  for (int i = 0; i < rank; ++i) c.push_back(i);
  return c;
}

// ---------------------------------------------------------------- tamari
struct TamariArgs {
  int n = 0;
  std::string j;
  std::string check = "lattice";
  std::string dot;
  int bound = 9;
};

Report cmd_tamari(const TamariArgs& a) {
  if (a.n < 1) throw InvalidInput("--n must be positive");
  if (a.n > a.bound) throw InvalidInput("n = " + std::to_string(a.n) + " exceeds the bound " + std::to_string(a.bound) + "; raise --bound");
  const JContext ctx(a.n, parse_j_list(a.j));
  const auto t = tamari_lattice(ctx);
  Report r{"tamari", {"check", "result", "detail"}, {}, {}, true};
  r.notes.push_back("n=" + std::to_string(a.n) + " J=" + format_j(ctx.j_set()) + ": " + std::to_string(t.elements.size()) +
                    " elements, quotient size " + std::to_string(quotient_size(ctx)));

  std::optional<QuotientReport> q;
  auto quotient_report = [&]() -> const QuotientReport& {
    if (!q) q = verify_quotient(ctx);
    return *q;
  };
  std::string checks = a.check;
  std::replace(checks.begin(), checks.end(), ',', ' ');
  std::istringstream ss(checks);
  for (std::string c; ss >> c;) {
    if (c == "lattice") {
      const auto rep = check_lattice(t.poset);
      std::string detail = std::to_string(t.elements.size()) + " elements";
      if (!rep.is_lattice) {
        detail = std::string(rep.meet_failed ? "no meet" : "no join") + " for " + t.poset.label(rep.witness->first) + ", " +
                 t.poset.label(rep.witness->second);
      }
      r.rows.push_back({"lattice", yes_no(rep.is_lattice), detail});
      r.ok = r.ok && rep.is_lattice;
    } else if (c == "quotient") {
      const auto& rep = quotient_report();
      const bool ok = rep.passed();
      r.rows.push_back({"quotient", yes_no(ok),
                        std::to_string(rep.class_count) + " classes of " + std::to_string(quotient_size(ctx)) +
                            " elements; quotient " + (rep.quotient_isomorphic ? "isomorphic" : "not isomorphic")});
      r.ok = r.ok && ok;
    } else if (c == "congruence") {
      const auto& rep = quotient_report();
      const bool ok = rep.classes_are_intervals && rep.projections_order_preserving;
      r.rows.push_back({"congruence", yes_no(ok),
                        std::string("classes are intervals: ") + (rep.classes_are_intervals ? "yes" : "no") +
                            "; projections monotone: " + (rep.projections_order_preserving ? "yes" : "no")});
      r.ok = r.ok && ok;
    } else {
      throw InvalidInput("unknown check: " + c);
    }
  }
  if (q)
    for (const auto& f : q->failures) r.notes.push_back("failure: " + f);
  if (!a.dot.empty()) write_file(a.dot, to_dot(t.poset, "tamari"));
  return r;
}

// ---------------------------------------------------------------- count
struct CountArgs {
  SystemFlags sys;
  std::string family;
  std::string j;
  std::string c;
  std::string decomposition = "positive";
  std::string root_poset;
  std::optional<int> bound;
};

Report cmd_count(const CountArgs& a) {
  const Family fam = parse_family(a.family);
  const auto rule = parse_decomposition_rule(a.decomposition);
  Report r{"count", {"family", "group", "J", "c", "count"}, {}, {}, true};

  if (a.sys.is_dihedral() && (a.sys.m > 6 || a.sys.m == 0)) {
    if (a.sys.m < 2) throw InvalidInput("type I needs --m >= 2");
    if (!a.root_poset.empty()) throw InvalidInput("--root-poset is not used for I2(m) with m > 6");
    const int off = a.sys.word_offset >= 0 ? a.sys.word_offset : 1;
    std::vector<int> names;
    const auto j = j_indices(a.j, off, 2);
    Word c{0, 1};
    if (!a.c.empty()) {
      c.clear();
      for (int v : parse_j_list(a.c)) c.push_back(v - off);
    }
    const auto counts = dihedral_counts(a.sys.m, j, c);
    const std::uint64_t v = fam == Family::Avoiding      ? counts.aligned
                            : fam == Family::Noncrossing ? counts.noncrossing
                            : fam == Family::Subword     ? counts.subword
                                                         : counts.nonnesting;
    for (int x : j) names.push_back(x + off);
    std::string cs = "s" + std::to_string(c[0] + off) + " s" + std::to_string(c[1] + off);
    r.rows.push_back({family_name(fam), "I2(" + std::to_string(a.sys.m) + ")", format_j(names),
                      fam == Family::Nonnesting ? "-" : cs, std::to_string(v)});
    r.notes.push_back("via: dihedral closed form");
    return r;
  }

  const auto sys = a.sys.make();
  if (!sys.is_finite()) throw InvalidInput("counts need a finite group");
  const int off = a.sys.offset(sys);
  const bool type_a = sys.type() == CoxeterType::A;
  const int limit = a.bound.value_or(type_a ? 9 : 4);
  if (type_a ? sys.rank() + 1 > limit : sys.rank() > limit)
    throw InvalidInput("group exceeds the enumeration bound " + std::to_string(limit) + "; raise --bound");

  CountRequest req;
  req.family = fam;
  req.rule = rule;
  req.j_set = j_indices(a.j, off, sys.rank());
  req.c_word = a.c.empty() ? linear_c(sys.rank()) : parse_word(sys, a.c, off);
  if (!a.root_poset.empty()) req.root_poset = parse_root_poset(sys, read_file(a.root_poset));

  std::vector<int> names;
  for (int x : req.j_set) names.push_back(x + off);
  std::uint64_t value = 0;
  std::string via = "matrix engine";
  const bool linear = req.c_word == linear_c(sys.rank());
  if (type_a && linear && rule == DecompositionRule::Positive && !req.root_poset && fam != Family::Subword) {
    std::vector<int> jn;
    for (int x : req.j_set) jn.push_back(x + 1);
    const JContext ctx(sys.rank() + 1, jn);
    if (fam == Family::Avoiding) value = avoiding_elements(ctx).size();
    if (fam == Family::Noncrossing) value = noncrossing_partitions(ctx).size();
    if (fam == Family::Nonnesting) value = all_root_ideals(ctx).size();
    via = "permutation and set-partition enumeration";
  } else {
    if (fam == Family::Nonnesting && !req.root_poset && sys.type() == CoxeterType::H && sys.rank() == 4)
      throw InvalidInput("NN for H4 needs --root-poset FILE");
    value = count_family(sys, req);
    if (fam == Family::Nonnesting) via = req.root_poset ? "ideals of the supplied root poset" : "ideals of the built-in root poset";
  }
  r.rows.push_back({family_name(fam), sys.name(), format_j(names),
                    fam == Family::Nonnesting ? "-" : format_word(sys, req.c_word), std::to_string(value)});
  r.notes.push_back("via: " + via);
  return r;
}

// ---------------------------------------------------------------- tables
struct TablesArgs {
  std::string suite = "all";
  std::string root_poset;
};

std::string j_label(const std::vector<int>& j) { return format_j(j); }

Report cmd_tables(const TablesArgs& a, Format fmt) {
  std::vector<std::string> suites;
  if (a.suite == "all") suites = table_suite_names();
  else suites.push_back(a.suite);
  std::optional<std::string> poset_text;
  if (!a.root_poset.empty()) poset_text = read_file(a.root_poset);

  Report r{"tables", {}, {}, {}, true};
  std::size_t total = 0, mism = 0, skip = 0;
  const auto known = table_suite_names();
  for (const auto& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) throw InvalidInput("unknown table suite: " + s);
    const auto rep = run_table_suite(s, poset_text);
    total += rep.cells.size();
    mism += rep.mismatches();
    skip += rep.skipped();
    if (fmt != Format::Human) {
      r.header = {"suite", "group", "J", "c", "family", "expected", "computed", "status", "source"};
      for (const auto& c : rep.cells)
        r.rows.push_back({s, c.group, j_label(c.j), c.c.empty() ? "-" : c.c, c.family, std::to_string(c.expected),
                          c.computed ? std::to_string(*c.computed) : "-",
                          c.skipped() ? "skipped" : (c.matches() ? "match" : "mismatch"), c.source});
      continue;
    }
    // Human view: one line per (group, J, expected value), mismatching cells spelled out.
    r.header = {"suite", "group", "J", "c", "align", "nc", "sw", "nn", "status"};
    std::map<std::tuple<std::string, std::vector<int>>, std::size_t> first_seen;
    struct Line {
      std::string group;
      std::vector<int> j;
      std::map<std::uint64_t, std::vector<std::string>> c_by_expected;
      std::vector<std::string> bad;
      std::string nn = "-";
      bool ok = true;
    };
    std::vector<Line> lines;
    for (const auto& c : rep.cells) {
      auto key = std::make_tuple(c.group, c.j);
      auto it = first_seen.find(key);
      if (it == first_seen.end()) {
        it = first_seen.emplace(key, lines.size()).first;
        lines.push_back({c.group, c.j, {}, {}, "-", true});
      }
      Line& l = lines[it->second];
      if (c.family == "nn") {
        l.nn = c.skipped() ? "skipped (" + std::to_string(c.expected) + ")"
                           : std::to_string(*c.computed) + (c.matches() ? "" : " != " + std::to_string(c.expected));
      } else {
        auto& v = l.c_by_expected[c.expected];
        if (v.empty() || v.back() != c.c) v.push_back(c.c);
        if (!c.matches()) l.bad.push_back(c.family + " " + c.c + " = " + std::to_string(*c.computed));
      }
      if (!c.skipped() && !c.matches()) l.ok = false;
    }
    for (const auto& l : lines) {
      for (const auto& [expected, cs] : l.c_by_expected) {
        const std::string clabel = cs.size() > 2 ? std::to_string(cs.size()) + " Coxeter elements" : [&] {
          std::string x;
          for (const auto& c : cs) x += (x.empty() ? "" : "; ") + c;
          return x;
        }();
        const std::string e = std::to_string(expected);
        r.rows.push_back({s, l.group, j_label(l.j), clabel, e, e, e, l.nn, l.ok ? "match" : "MISMATCH"});
      }
      for (const auto& b : l.bad) r.notes.push_back("mismatch " + l.group + " " + j_label(l.j) + ": " + b);
    }
  }
  r.ok = mism == 0;
  r.notes.push_back("cells: " + std::to_string(total - mism - skip) + " match, " + std::to_string(mism) + " mismatch, " +
                    std::to_string(skip) + " skipped" + (skip ? " (NN needs --root-poset FILE)" : ""));
  return r;
}

// ---------------------------------------------------------------- bijection
struct BijectionArgs {
  int n = 0;
  std::string j;
  bool sample = false;
  int sample_size = 200;
  int bound = 9;
};

Report cmd_bijection(const BijectionArgs& a) {
  if (a.n < 1) throw InvalidInput("--n must be positive");
  if (!a.sample && a.n > a.bound)
    throw InvalidInput("n = " + std::to_string(a.n) + " exceeds the bound " + std::to_string(a.bound) + "; use --sample or --bound");
  const JContext ctx(a.n, parse_j_list(a.j));
  Report r{"bijection", {"check", "result", "detail"}, {}, {}, true};
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    r.rows.push_back({name, yes_no(ok), detail});
    r.ok = r.ok && ok;
  };

  const auto perms = avoiding_elements(ctx);
  std::vector<Permutation> perm_sample = perms;
  std::vector<SetPartition> nc, nn;
  if (a.sample) {
    std::mt19937 rng(20150101u);
    std::shuffle(perm_sample.begin(), perm_sample.end(), rng);
    if (perm_sample.size() > static_cast<std::size_t>(a.sample_size)) perm_sample.resize(static_cast<std::size_t>(a.sample_size));
    for (const auto& w : perm_sample) nc.push_back(perm_to_nc(w, ctx));
    for (const auto& p : nc) nn.push_back(nc_to_nn(p, ctx));
  } else {
    nc = noncrossing_partitions(ctx);
    nn = nonnesting_partitions(ctx);
    const bool eq = perms.size() == nc.size() && nc.size() == nn.size();
    add("cardinalities", eq,
        std::to_string(perms.size()) + " avoiding, " + std::to_string(nc.size()) + " noncrossing, " + std::to_string(nn.size()) +
            " nonnesting");
  }

  std::size_t bad = 0;
  for (const auto& w : perm_sample) {
    const auto p = perm_to_nc(w, ctx);
    if (!is_j_noncrossing(p, ctx) || nc_to_perm(p, ctx) != w) ++bad;
  }
  add("perm -> nc -> perm", bad == 0, std::to_string(perm_sample.size() - bad) + "/" + std::to_string(perm_sample.size()));

  bad = 0;
  for (const auto& p : nc) {
    const auto w = nc_to_perm(p, ctx);
    if (!is_quotient_member(w, ctx) || has_j231_pattern(w, ctx) || perm_to_nc(w, ctx) != p) ++bad;
  }
  add("nc -> perm -> nc", bad == 0, std::to_string(nc.size() - bad) + "/" + std::to_string(nc.size()));

  bad = 0;
  for (const auto& p : nc) {
    const auto q = nc_to_nn(p, ctx);
    if (!is_j_nonnesting(q, ctx) || nn_to_nc(q, ctx) != p) ++bad;
  }
  add("nc -> nn -> nc", bad == 0, std::to_string(nc.size() - bad) + "/" + std::to_string(nc.size()));

  bad = 0;
  for (const auto& q : nn) {
    const auto p = nn_to_nc(q, ctx);
    if (!is_j_noncrossing(p, ctx) || nc_to_nn(p, ctx) != q) ++bad;
  }
  add("nn -> nc -> nn", bad == 0, std::to_string(nn.size() - bad) + "/" + std::to_string(nn.size()));

  // Bumps (2,9),(3,10),(6,8) for J = {1,2,3,5,8} in [10].
  if (a.n == 10 && ctx.j_set() == std::vector<int>{1, 2, 3, 5, 8}) {
    const SetPartition p = SetPartition::from_bumps(10, {{2, 9}, {3, 10}, {6, 8}});
    const Permutation expected = Permutation::parse("1 7 9 10 2 5 3 4 6 8");
    const auto w = nc_to_perm(p, ctx);
    add("worked example", w == expected && perm_to_nc(w, ctx) == p, ctx.format(w));
  }
  r.notes.push_back("n=" + std::to_string(a.n) + " J=" + format_j(ctx.j_set()) + (a.sample ? " (sampled)" : " (exhaustive)"));
  return r;
}

// ---------------------------------------------------------------- aligned
struct AlignedArgs {
  SystemFlags sys;
  std::string word;
  std::string j;
  std::string c;
  std::string element;
  std::string decomposition = "positive";
  bool check_lattice = false;
  bool explain = false;
  std::string dot;
};

std::string t_list(const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::string("t") + std::to_string(idx[i] + 1);
  return s + "}";
}

Report cmd_aligned(const AlignedArgs& a) {
  Report r{"aligned", {"element", "length", "cov", "inv"}, {}, {}, true};
  if (a.sys.is_dihedral() && a.sys.m > 6) {
    if (!a.word.empty()) throw InvalidInput("I2(m) with m > 6 supports --j/--c only");
    const int off = a.sys.word_offset >= 0 ? a.sys.word_offset : 1;
    Word c{0, 1};
    if (!a.c.empty()) {
      c.clear();
      for (int v : parse_j_list(a.c)) c.push_back(v - off);
    }
    r.header = {"element", "length"};
    for (const auto& w : dihedral_aligned(a.sys.m, j_indices(a.j, off, 2), c)) {
      std::string s;
      for (int x : w) s += (s.empty() ? "s" : " s") + std::to_string(x + off);
      r.rows.push_back({w.empty() ? "e" : s, std::to_string(w.size())});
    }
    r.notes.push_back(std::to_string(r.rows.size()) + " aligned elements (dihedral closed form)");
    return r;
  }

  const auto sys = a.sys.make();
  const int off = a.sys.offset(sys);
  const auto rule = parse_decomposition_rule(a.decomposition);
  AlignedSet set = [&] {
    if (!a.word.empty()) {
      const Word w = parse_word(sys, a.word, off);
      if (!is_reduced(sys, w)) throw InvalidInput("word is not reduced: " + a.word);
      return aligned_set_general(sys, w, rule);
    }
    const Word c = a.c.empty() ? linear_c(sys.rank()) : parse_word(sys, a.c, off);
    return aligned_set_parabolic(sys, j_indices(a.j, off, sys.rank()), c, rule);
  }();
  const auto& iv = set.ctx.interval;
  auto name = [&](int x) {
    const Word& w = iv.elements[static_cast<std::size_t>(x)].word();
    if (w.empty()) return std::string("e");
    std::string s;
    for (int g : w) s += (s.empty() ? "s" : " s") + std::to_string(g + off);
    return s;
  };
  auto inv_idx = [&](int x) {
    std::vector<int> v;
    for (std::size_t k = 0; k < iv.roots.size(); ++k)
      if (iv.inversions[static_cast<std::size_t>(x)].test(k)) v.push_back(static_cast<int>(k));
    return v;
  };
  for (int x : set.members) {
    auto cov = iv.covers[static_cast<std::size_t>(x)];
    std::sort(cov.begin(), cov.end());
    r.rows.push_back({name(x), std::to_string(iv.elements[static_cast<std::size_t>(x)].length()), t_list(cov), t_list(inv_idx(x))});
  }
  r.notes.push_back("interval: " + std::to_string(iv.elements.size()) + " elements; aligned: " + std::to_string(set.members.size()));

  if (a.explain) {
    for (std::size_t k = 0; k < iv.roots.size(); ++k)
      r.notes.push_back("t" + std::to_string(k + 1) + " = " + to_string(iv.roots[k]));
    std::map<int, std::vector<std::string>> by_gamma;
    for (const auto& d : set.ctx.table)
      by_gamma[d.gamma].push_back(to_string(d.a) + "*b" + std::to_string(d.alpha + 1) + " + " + to_string(d.b) + "*b" +
                                  std::to_string(d.beta + 1));
    for (const auto& [g, ds] : by_gamma) {
      std::string s = "b" + std::to_string(g + 1);
      for (const auto& d : ds) s += " = " + d;
      r.notes.push_back(s);
    }
  }

  if (!a.element.empty()) {
    const Word w = parse_word(sys, a.element, off);
    const auto x = element_from_word(sys, w);
    Bitset inv(iv.roots.size());
    for (const auto& root : left_inversion_set(sys, x)) {
      auto it = iv.root_index.find(root);
      if (it == iv.root_index.end()) throw InvalidInput("element is not below the base word: " + a.element);
      inv.set(static_cast<std::size_t>(it->second));
    }
    const int idx = iv.index_of(inv);
    auto cov = iv.covers[static_cast<std::size_t>(idx)];
    std::sort(cov.begin(), cov.end());
    r.notes.push_back("element " + name(idx) + ": cov = " + t_list(cov) + ", inv = " + t_list(inv_idx(idx)) + ", " +
                      (is_aligned(set.ctx, idx) ? "aligned" : "not aligned"));
  }

  const auto poset = set.poset();
  if (a.check_lattice) {
    const auto rep = check_lattice(poset);
    if (rep.is_lattice) {
      r.notes.push_back("lattice: yes");
    } else {
      auto order = rep.bounds;
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto& lx = poset.label(x);
        const auto& ly = poset.label(y);
        return lx.size() != ly.size() ? lx.size() > ly.size() : lx < ly;
      });
      std::string bounds;
      for (int b : order) bounds += (bounds.empty() ? "" : ", ") + poset.label(b);
      r.notes.push_back("lattice: no; " + poset.label(rep.witness->first) + " and " + poset.label(rep.witness->second) + " have " +
                        (rep.meet_failed ? "maximal lower bounds {" : "minimal upper bounds {") + bounds + "}");
      r.ok = false;
    }
  }
  if (!a.dot.empty()) write_file(a.dot, to_dot(poset, "aligned"));
  return r;
}

// ---------------------------------------------------------------- conjectures
struct ConjectureArgs {
  std::string scope = "A3";
  bool fully_commutative = false;
};

Report cmd_conjectures(const ConjectureArgs& a) {
  std::vector<std::string> groups;
  bool fc = a.fully_commutative;
  std::string scope = a.scope;
  std::replace(scope.begin(), scope.end(), ',', ' ');
  std::istringstream ss(scope);
  for (std::string tok; ss >> tok;) {
    if (tok == "fully-commutative" || tok == "fc") fc = true;
    else groups.push_back(tok);
  }
  if (groups.empty()) groups = {"A3", "A4", "B3", "D4", "H3"};

  Report r{"conjectures", {"group", "J", "c", "align", "lattice", "flip-iso"}, {}, {}, true};
  if (fc) r.header = {"group", "J", "c", "align", "quotient", "align=quotient", "lattice"};
  for (const auto& g : groups) {
    SystemFlags f;
    f.type = g;
    const auto sys = f.make();
    if (!sys.is_finite() || sys.rank() > 4) throw InvalidInput("conjecture scope is limited to finite groups of rank <= 4: " + g);
    std::vector<std::vector<int>> js;
    const int n = sys.rank();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> j;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) j.push_back(i);
      if (fc) {
        if (static_cast<int>(j.size()) != n - 1) continue;
        if (!is_fully_commutative(sys, quotient_longest_element(sys, j).word())) continue;
      }
      js.push_back(j);
    }
    std::sort(js.begin(), js.end(), [](const auto& x, const auto& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
    for (const auto& j : js) {
      std::vector<int> names;
      for (int x : j) names.push_back(x + sys.name_offset());
      for (const Word& c : coxeter_elements(sys)) {
        const auto set = aligned_set_parabolic(sys, j, c);
        const auto poset = set.poset();
        const bool lat = is_lattice(poset);
        if (fc) {
          const auto q = enumerate_parabolic_quotient(sys, j).size();
          const bool whole = q == set.members.size();
          r.rows.push_back({sys.name(), format_j(names), format_word(sys, c), std::to_string(set.members.size()),
                            std::to_string(q), yes_no(whole), yes_no(lat)});
          r.ok = r.ok && whole && lat;
        } else {
          const auto fl = flip_poset(facets(cluster_complex(sys, j, c)));
          const bool iso = is_isomorphic(poset, fl);
          r.rows.push_back({sys.name(), format_j(names), format_word(sys, c), std::to_string(set.members.size()), yes_no(lat),
                            yes_no(iso)});
          r.ok = r.ok && lat && iso;
        }
      }
    }
  }
  r.notes.push_back("verdicts cover the listed instances only");
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parabolic Catalan combinatorics: counts, lattice checks and table reproduction"};
  app.name("parcat");
  app.require_subcommand(1);
  std::string out_format = "human";
  app.add_option("--out", out_format, "human, csv or json")->check(CLI::IsMember({"human", "csv", "json"}));

  TamariArgs ta;
  auto* tam = app.add_subcommand("tamari", "Build the parabolic Tamari lattice and run checks");
  tam->add_option("--n", ta.n, "permutation size")->required();
  tam->add_option("--j", ta.j, "generators in J, e.g. \"1,3\"");
  tam->add_option("--check", ta.check, "comma list of lattice, quotient, congruence");
  tam->add_option("--dot", ta.dot, "write the lattice as DOT");
  tam->add_option("--bound", ta.bound, "largest n accepted");

  CountArgs ca;
  auto* cnt = app.add_subcommand("count", "Count one parabolic family");
  cnt->add_option("--family", ca.family, "avoiding, nc, nn or subword")->required();
  ca.sys.add(cnt);
  cnt->add_option("--j", ca.j, "generators in J");
  cnt->add_option("--c", ca.c, "Coxeter element word (default s1 s2 ... in order)");
  cnt->add_option("--decomposition", ca.decomposition, "positive or integers");
  cnt->add_option("--root-poset", ca.root_poset, "root poset file");
  int count_bound = 0;
  cnt->add_option("--bound", count_bound, "largest n for type A, largest rank otherwise");

  TablesArgs tb;
  auto* tab = app.add_subcommand("tables", "Recompute the reference tables and diff against the embedded values");
  tab->add_option("--suite", tb.suite, "a4b4, d4, h3, h4, f4 or all");
  tab->add_option("--root-poset", tb.root_poset, "root poset file used for the NN column");

  BijectionArgs bj;
  auto* bij = app.add_subcommand("bijection", "Verify the avoiding / noncrossing / nonnesting bijections");
  bij->add_option("--n", bj.n, "permutation size")->required();
  bij->add_option("--j", bj.j, "generators in J");
  bij->add_flag("--sample", bj.sample, "check a deterministic sample instead of everything");
  bij->add_option("--sample-size", bj.sample_size, "sample size");
  bij->add_option("--bound", bj.bound, "largest n checked exhaustively");

  AlignedArgs al;
  auto* ali = app.add_subcommand("aligned", "List aligned elements below a reduced word or w_0^J");
  al.sys.add(ali);
  ali->add_option("--word", al.word, "reduced word fixing the inversion order");
  ali->add_option("--j", al.j, "generators in J (when no --word)");
  ali->add_option("--c", al.c, "Coxeter element word (when no --word)");
  ali->add_option("--element", al.element, "report cov/inv/alignment of one element");
  ali->add_option("--decomposition", al.decomposition, "positive or integers");
  ali->add_flag("--check-lattice", al.check_lattice, "test the lattice property and print a witness");
  ali->add_flag("--explain", al.explain, "print the inversion order and decompositions");
  ali->add_option("--dot", al.dot, "write the aligned poset as DOT");

  ConjectureArgs cj;
  auto* con = app.add_subcommand("conjectures", "Check the lattice and flip-poset conjectures on small groups");
  con->add_option("--scope", cj.scope, "groups such as A3,D4 and/or fully-commutative");
  con->add_flag("--fully-commutative", cj.fully_commutative, "restrict to maximal J with fully commutative w_0^J");

  std::vector<const char*> argv{"parcat"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(out_format);
    Report rep;
    if (*tam) rep = cmd_tamari(ta);
    else if (*cnt) {
      if (count_bound > 0) ca.bound = count_bound;
      rep = cmd_count(ca);
    } else if (*tab) rep = cmd_tables(tb, fmt);
    else if (*bij) rep = cmd_bijection(bj);
    else if (*ali) rep = cmd_aligned(al);
    else if (*con) rep = cmd_conjectures(cj);
    emit(rep, fmt, out);
    return rep.ok ? 0 : 1;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace parcat::cli
