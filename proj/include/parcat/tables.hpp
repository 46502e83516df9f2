#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parcat/alignment.hpp"
#include "parcat/coxeter.hpp"

namespace parcat {

enum class Family { Avoiding, Noncrossing, Nonnesting, Subword };

// "avoiding" (alias "align"), "nc", "nn", "subword" (alias "sw").
Family parse_family(const std::string& text);
std::string family_name(Family f);

struct CountRequest {
  Family family = Family::Avoiding;
  std::vector<int> j_set;  // 0-based
  Word c_word;             // ignored by Nonnesting
  DecompositionRule rule = DecompositionRule::Positive;
  std::optional<RootPosetData> root_poset;  // overrides the built-in one
};

// Align, NC, SW go through the matrix engine; NN through the root poset.
std::uint64_t count_family(const CoxeterSystem& sys, const CountRequest& req);

struct TableCell {
  std::string group;   // e.g. "A4"
  std::vector<int> j;  // generator names as printed (1-based)
  std::string c;       // Coxeter word, empty for NN
  std::string family;  // align, nc, sw, nn
  std::uint64_t expected = 0;
  std::optional<std::uint64_t> computed;  // empty when skipped
  std::string source;

  bool skipped() const { return !computed.has_value(); }
  bool matches() const { return computed && *computed == expected; }
};

struct TableReport {
  std::string suite;
  std::vector<TableCell> cells;

  bool all_match() const;  // skipped cells do not count as mismatches
  std::size_t mismatches() const;
  std::size_t skipped() const;
};

std::vector<std::string> table_suite_names();
// The raw fixture document.
const std::string& table_fixture_json();
// root_poset_text replaces the built-in poset of every group in the suite; groups
// flagged as needing a file skip their NN cells without one.
TableReport run_table_suite(const std::string& suite, const std::optional<std::string>& root_poset_text = {});

}  // namespace parcat
