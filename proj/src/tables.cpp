#include "parcat/tables.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "parcat/errors.hpp"
#include "parcat/subword.hpp"
#include "parcat/tables_data.hpp"

namespace parcat {

Family parse_family(const std::string& text) {
  std::string s;
  for (char ch : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "avoiding" || s == "align" || s == "aligned") return Family::Avoiding;
  if (s == "nc" || s == "noncrossing") return Family::Noncrossing;
  if (s == "nn" || s == "nonnesting") return Family::Nonnesting;
  if (s == "subword" || s == "sw") return Family::Subword;
  throw InvalidInput("unknown family: " + text);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Avoiding: return "align";
    case Family::Noncrossing: return "nc";
    case Family::Nonnesting: return "nn";
    case Family::Subword: return "sw";
  }
  return "?";
}

std::uint64_t count_family(const CoxeterSystem& sys, const CountRequest& req) {
  switch (req.family) {
    case Family::Avoiding:
      return aligned_set_parabolic(sys, req.j_set, req.c_word, req.rule).members.size();
    case Family::Noncrossing:
      return noncrossing_set(aligned_set_parabolic(sys, req.j_set, req.c_word, req.rule)).size();
    case Family::Subword:
      return facet_count(cluster_complex(sys, req.j_set, req.c_word));
    case Family::Nonnesting:
      if (req.root_poset) return nonnesting_count(*req.root_poset, req.j_set);
      return nonnesting_count(sys, req.j_set);
  }
  return 0;
}

bool TableReport::all_match() const { return mismatches() == 0; }

std::size_t TableReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return !c.skipped() && !c.matches(); }));
}

std::size_t TableReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return c.skipped(); }));
}

const std::string& table_fixture_json() {
  static const std::string text = fixtures::kTableFixtures;
  return text;
}

namespace {

using nlohmann::json;

const json& fixture() {
  static const json doc = json::parse(table_fixture_json());
  return doc;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::vector<std::string> table_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : fixture().at("suites").items()) out.push_back(name);
  return out;
}

TableReport run_table_suite(const std::string& suite, const std::optional<std::string>& root_poset_text) {
  const auto& suites = fixture().at("suites");
  if (!suites.contains(suite)) throw InvalidInput("unknown table suite: " + suite);
  TableReport report{suite, {}};

  for (const auto& g : suites.at(suite).at("groups")) {
    const auto type = CoxeterSystem::parse_type(g.at("type").get<std::string>());
    const int rank = g.at("rank").get<int>();
    const auto sys = CoxeterSystem::make(type, rank);
    const std::string group = g.at("type").get<std::string>() + std::to_string(rank);

    std::optional<RootPosetData> poset;
    if (root_poset_text) poset = parse_root_poset(sys, *root_poset_text);
    const bool nn_needs_file = g.value("nn_needs_file", false);

    // Each column (or each Coxeter element) with the value it should produce.
    const bool per_column = g.at("c_mode").get<std::string>() == "columns";
    std::vector<Word> columns;
    if (per_column)
      for (const auto& c : g.at("c_columns")) columns.push_back(parse_word(sys, c.get<std::string>()));
    else
      columns = coxeter_elements(sys);

    for (const auto& row : g.at("rows")) {
      std::vector<int> names = row.at("J").get<std::vector<int>>();
      std::vector<int> j_set;
      for (int n : names) j_set.push_back(n - sys.name_offset());
      const std::string source = row.at("source").get<std::string>();

      for (std::size_t k = 0; k < columns.size(); ++k) {
        const std::uint64_t expected = per_column ? row.at("per_c").at(k).get<std::uint64_t>()
                                                  : row.at("align_nc_sw").get<std::uint64_t>();
        // A column stands for c and c^{-1}.
        std::vector<Word> cs{columns[k]};
        if (per_column && reversed(columns[k]) != columns[k]) cs.push_back(reversed(columns[k]));
        for (const Word& c : cs) {
          const auto aligned = aligned_set_parabolic(sys, j_set, c);
          const std::uint64_t counts[3] = {aligned.members.size(), noncrossing_set(aligned).size(),
                                           facet_count(cluster_complex(sys, j_set, c))};
          const char* fams[3] = {"align", "nc", "sw"};
          for (int f = 0; f < 3; ++f)
            report.cells.push_back({group, names, format_word(sys, c), fams[f], expected, counts[f], source});
        }
      }

      TableCell nn{group, names, "", "nn", row.at("nn").get<std::uint64_t>(), std::nullopt, source};
      if (poset) nn.computed = nonnesting_count(*poset, j_set);
      else if (!nn_needs_file) nn.computed = nonnesting_count(sys, j_set);
      report.cells.push_back(std::move(nn));
    }
  }
  return report;
}

}  // namespace parcat
