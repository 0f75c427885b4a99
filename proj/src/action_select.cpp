#include "mvlogic/action_select.hpp"

#include <set>

#include "mvlogic/error.hpp"

namespace mvlogic {

char to_char(Subjective s) {
  switch (s) {
  case Subjective::True:
    return 'T';
  case Subjective::False:
    return 'F';
  case Subjective::Unknown:
    return 'U';
  }
  return '?';
}

Subjective subjective_from(char c) {
  switch (c) {
  case 'T':
    return Subjective::True;
  case 'F':
    return Subjective::False;
  case 'U':
    return Subjective::Unknown;
  default:
    throw Error(Errc::validation, std::string("'") + c + "' is not a subjective truth value");
  }
}

ActionSet::ActionSet(std::vector<std::string> actions) : actions_(std::move(actions)) {
  if (actions_.size() < 2) {
    throw Error(Errc::validation, "an action set needs at least two actions");
  }
  std::set<std::string> seen;
  for (const auto& id : actions_) {
    if (id.empty() || !seen.insert(id).second) {
      throw Error(Errc::validation, "action ids must be non-empty and distinct");
    }
  }
}

bool ActionSet::contains(const std::string& id) const {
  for (const auto& a : actions_) {
    if (a == id) {
      return true;
    }
  }
  return false;
}

const char* to_string(NoSelectionCase c) {
  switch (c) {
  case NoSelectionCase::AllTrue:
    return "all-true";
  case NoSelectionCase::AllFalse:
    return "all-false";
  case NoSelectionCase::AllUnknown:
    return "all-unknown";
  case NoSelectionCase::MultiTrue:
    return "multi-true";
  case NoSelectionCase::MultiUnknown:
    return "multi-unknown";
  }
  return "?";
}

SelectionOutcome select_rational(const std::map<std::string, Subjective>& beliefs) {
  if (beliefs.empty()) {
    throw Error(Errc::validation, "selection over an empty belief profile");
  }
  std::size_t trues = 0;
  std::size_t unknowns = 0;
  const std::string* true_action = nullptr;
  const std::string* unknown_action = nullptr;
  for (const auto& [action, value] : beliefs) {
    switch (value) {
    case Subjective::True:
      ++trues;
      true_action = &action;
      break;
    case Subjective::Unknown:
      ++unknowns;
      unknown_action = &action;
      break;
    case Subjective::False:
      break;
    }
  }

  SelectionOutcome outcome;
  if (trues == 1) {
    outcome.selected = *true_action;
    return outcome;
  }
  if (trues == 0 && unknowns == 1) {
    outcome.selected = *unknown_action;
    return outcome;
  }

  const std::size_t n = beliefs.size();
  if (trues == n) {
    outcome.no_selection = NoSelectionCase::AllTrue;
  } else if (trues >= 2) {
    outcome.no_selection = NoSelectionCase::MultiTrue;
  } else if (unknowns == 0) {
    outcome.no_selection = NoSelectionCase::AllFalse;
  } else if (unknowns == n) {
    outcome.no_selection = NoSelectionCase::AllUnknown;
  } else {
    outcome.no_selection = NoSelectionCase::MultiUnknown;
  }
  return outcome;
}

SelectorTables build_selector_tables() {
  DomainRef atomic = make_domain("atomic", {"T", "F", "U"});
  DomainRef cohesive = make_domain("cohesive", {"t", "f", "u"});

  // Rows index the first action's value, columns the second's.
  auto rows = [&](const char* outs) {
    std::vector<ConnectiveTable::Row> result;
    static const char* symbols[] = {"T", "F", "U"};
    std::size_t k = 0;
    for (const auto* a : symbols) {
      for (const auto* b : symbols) {
        result.push_back({{a, b}, std::string(1, outs[k++])});
      }
    }
    return result;
  };

  ConnectiveTable sel1("sel1", 2, atomic, cohesive, rows("utt"
                                                         "fuf"
                                                         "ftu"));
  ConnectiveTable sel0("sel0", 2, atomic, cohesive, rows("uff"
                                                         "tut"
                                                         "tfu"));
  return SelectorTables{std::move(sel1), std::move(sel0)};
}

SelectorConsistencyReport selector_consistency_check(const SelectorTables& tables) {
  static const Subjective kValues[] = {Subjective::True, Subjective::False, Subjective::Unknown};

  SelectorConsistencyReport report;
  for (Subjective a1 : kValues) {
    for (Subjective a0 : kValues) {
      SelectorConsistencyCell cell;
      cell.a1 = a1;
      cell.a0 = a0;
      std::vector<std::string> in{std::string(1, to_char(a1)), std::string(1, to_char(a0))};
      cell.sel1_out = tables.sel1.lookup_symbols(in).symbol();
      cell.sel0_out = tables.sel0.lookup_symbols(in).symbol();
      cell.rule = select_rational({{"A1", a1}, {"A0", a0}});

      const bool rule_picks_a1 = cell.rule.selected == "A1";
      const bool rule_picks_a0 = cell.rule.selected == "A0";
      const bool ambiguous = !cell.rule.is_selected();
      cell.consistent = (cell.sel1_out == "t") == rule_picks_a1 &&
                        (cell.sel0_out == "t") == rule_picks_a0 &&
                        (ambiguous ? (cell.sel1_out == "u" && cell.sel0_out == "u")
                                   : (cell.sel1_out != "u" && cell.sel0_out != "u"));
      report.consistent = report.consistent && cell.consistent;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

} // namespace mvlogic
