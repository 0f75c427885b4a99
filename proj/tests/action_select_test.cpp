#include <doctest.h>

#include <algorithm>
#include <random>

#include "mvlogic/action_select.hpp"
#include "mvlogic/builtin.hpp"
#include "test_support.hpp"

using namespace mvlogic;

namespace {

std::map<std::string, Subjective> profile(
    std::initializer_list<std::pair<const char*, char>> entries) {
  std::map<std::string, Subjective> out;
  for (const auto& [action, value] : entries) {
    out[action] = subjective_from(value);
  }
  return out;
}

} // namespace

TEST_CASE("selector tables match the golden transcription") {
  SelectorTables tables = build_selector_tables();
  auto golden = test::load_golden_tables(test::test_data_path("selector_golden.txt"));

  REQUIRE(golden.at("sel1").size() == 9);
  REQUIRE(golden.at("sel0").size() == 9);
  for (const auto& row : golden.at("sel1")) {
    CHECK(tables.sel1.lookup_symbols(row.in).symbol() == row.out);
  }
  for (const auto& row : golden.at("sel0")) {
    CHECK(tables.sel0.lookup_symbols(row.in).symbol() == row.out);
  }

  // Spot values quoted directly from the source tables.
  CHECK(tables.sel1.lookup_symbols({"T", "F"}).symbol() == "t");
  CHECK(tables.sel1.lookup_symbols({"T", "T"}).symbol() == "u");
  CHECK(tables.sel0.lookup_symbols({"U", "T"}).symbol() == "t");
}

TEST_CASE("the bundled system carries the same selector tables") {
  LogicSystem svl = builtin::svl();
  SelectorTables tables = build_selector_tables();
  CHECK(svl.connective("sel1") == tables.sel1);
  CHECK(svl.connective("sel0") == tables.sel0);
}

TEST_CASE("select_rational picks the unique dominant action") {
  auto a1 = select_rational(profile({{"A0", 'U'}, {"A1", 'T'}}));
  CHECK(a1.selected == "A1");

  auto a0 = select_rational(profile({{"A0", 'U'}, {"A1", 'F'}}));
  CHECK(a0.selected == "A0");

  auto monty = select_rational(profile({{"D1", 'U'}, {"D2", 'F'}, {"D3", 'T'}}));
  CHECK(monty.selected == "D3");

  auto unknown_among_false = select_rational(profile({{"A", 'F'}, {"B", 'U'}, {"C", 'F'}}));
  CHECK(unknown_among_false.selected == "B");

  auto true_among_unknowns = select_rational(profile({{"A", 'T'}, {"B", 'U'}, {"C", 'U'}}));
  CHECK(true_among_unknowns.selected == "A");
}

TEST_CASE("select_rational tags the five no-selection cases") {
  auto all_true = select_rational(profile({{"A0", 'T'}, {"A1", 'T'}}));
  CHECK_FALSE(all_true.is_selected());
  CHECK(all_true.no_selection == NoSelectionCase::AllTrue);

  auto all_false = select_rational(profile({{"A", 'F'}, {"B", 'F'}, {"C", 'F'}}));
  CHECK(all_false.no_selection == NoSelectionCase::AllFalse);

  auto all_unknown = select_rational(profile({{"A0", 'U'}, {"A1", 'U'}}));
  CHECK(all_unknown.no_selection == NoSelectionCase::AllUnknown);

  auto multi_true = select_rational(profile({{"A", 'T'}, {"B", 'T'}, {"C", 'F'}}));
  CHECK(multi_true.no_selection == NoSelectionCase::MultiTrue);

  auto multi_true_u = select_rational(profile({{"A", 'T'}, {"B", 'T'}, {"C", 'U'}}));
  CHECK(multi_true_u.no_selection == NoSelectionCase::MultiTrue);

  auto multi_unknown = select_rational(profile({{"A", 'U'}, {"B", 'U'}, {"C", 'F'}}));
  CHECK(multi_unknown.no_selection == NoSelectionCase::MultiUnknown);
}

TEST_CASE("selection uniqueness and exhaustive case coverage") {
  // All 3^n profiles for n up to 5: either a uniquely justified selection
  // or exactly one case tag, never both.
  for (std::size_t n = 2; n <= 5; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= 3;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::map<std::string, Subjective> beliefs;
      std::size_t rem = code;
      std::size_t trues = 0;
      std::size_t unknowns = 0;
      for (std::size_t i = 0; i < n; ++i) {
        auto v = static_cast<Subjective>(rem % 3);
        rem /= 3;
        beliefs["a" + std::to_string(i)] = v;
        trues += v == Subjective::True;
        unknowns += v == Subjective::Unknown;
      }
      SelectionOutcome outcome = select_rational(beliefs);
      const bool should_select = trues == 1 || (trues == 0 && unknowns == 1);
      CHECK(outcome.is_selected() == should_select);
      CHECK(outcome.selected.has_value() != outcome.no_selection.has_value());
      if (should_select) {
        const Subjective winner = beliefs.at(*outcome.selected);
        CHECK(winner == (trues == 1 ? Subjective::True : Subjective::Unknown));
      }
    }
  }
}

TEST_CASE("selection is equivariant under action relabeling") {
  std::mt19937 rng(20240307);
  std::uniform_int_distribution<int> n_dist(2, 6);
  std::uniform_int_distribution<int> v_dist(0, 2);

  for (int round = 0; round < 1000; ++round) {
    const int n = n_dist(rng);
    std::vector<std::string> names;
    std::map<std::string, Subjective> beliefs;
    for (int i = 0; i < n; ++i) {
      names.push_back("a" + std::to_string(i));
      beliefs[names.back()] = static_cast<Subjective>(v_dist(rng));
    }

    std::vector<std::string> renamed = names;
    std::shuffle(renamed.begin(), renamed.end(), rng);
    std::map<std::string, std::string> rename;
    std::map<std::string, Subjective> permuted;
    for (int i = 0; i < n; ++i) {
      rename[names[i]] = renamed[i];
      permuted[renamed[i]] = beliefs[names[i]];
    }

    SelectionOutcome base = select_rational(beliefs);
    SelectionOutcome mapped = select_rational(permuted);
    CHECK(base.is_selected() == mapped.is_selected());
    if (base.is_selected()) {
      CHECK(rename.at(*base.selected) == *mapped.selected);
    } else {
      CHECK(base.no_selection == mapped.no_selection);
    }
  }
}

TEST_CASE("tables and rule agree on every two-action belief pair") {
  SelectorConsistencyReport report = selector_consistency_check(build_selector_tables());
  CHECK(report.consistent);
  CHECK(report.cells.size() == 9);

  for (const auto& cell : report.cells) {
    CHECK(cell.consistent);
    if (cell.a1 == cell.a0) {
      CHECK(cell.sel1_out == "u");
      CHECK(cell.sel0_out == "u");
      CHECK_FALSE(cell.rule.is_selected());
    }
  }

  // The matrix corners called out in the source: (T,F) selects the first
  // action, (F,F) is ambiguous.
  for (const auto& cell : report.cells) {
    if (cell.a1 == Subjective::True && cell.a0 == Subjective::False) {
      CHECK(cell.sel1_out == "t");
      CHECK(cell.rule.selected == "A1");
    }
    if (cell.a1 == Subjective::False && cell.a0 == Subjective::False) {
      CHECK(cell.rule.no_selection == NoSelectionCase::AllFalse);
    }
  }
}

TEST_CASE("action sets reject degenerate inputs") {
  CHECK_THROWS_AS(ActionSet({"only"}), Error);
  CHECK_THROWS_AS(ActionSet({"a", "a"}), Error);
  CHECK_THROWS_AS(ActionSet({"a", ""}), Error);
  ActionSet ok({"a", "b", "c"});
  CHECK(ok.size() == 3);
  CHECK(ok.contains("b"));
  CHECK_FALSE(ok.contains("d"));
}
