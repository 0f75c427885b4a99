#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvlogic/connective_table.hpp"

namespace mvlogic {

/// Subjective truth value of an action: the agent's belief about whether
/// the action contributes to its objective.
enum class Subjective { True, False, Unknown };

char to_char(Subjective s);
Subjective subjective_from(char c);

/// Ordered action set; at least two distinct actions.
class ActionSet {
public:
  explicit ActionSet(std::vector<std::string> actions);

  const std::vector<std::string>& actions() const { return actions_; }
  std::size_t size() const { return actions_.size(); }
  bool contains(const std::string& id) const;

private:
  std::vector<std::string> actions_;
};

/// The five belief patterns that admit no strictly rational selection:
/// uniform profiles, and mixed profiles with a tied winning pattern.
enum class NoSelectionCase { AllTrue, AllFalse, AllUnknown, MultiTrue, MultiUnknown };

const char* to_string(NoSelectionCase c);

struct SelectionOutcome {
  std::optional<std::string> selected;
  std::optional<NoSelectionCase> no_selection;

  bool is_selected() const { return selected.has_value(); }
};

/// The strictly rational selection rule: an action is selected iff it is
/// the unique one believed true while all others are false or unknown,
/// or the unique one unknown while all others are false. Everything else
/// is NoSelection, tagged with the applicable case.
SelectionOutcome select_rational(const std::map<std::string, Subjective>& beliefs);

/// The two-action selector tables for a risk-averse agent, as connective
/// tables over the standard three-valued domains: `sel1` outputs t iff
/// the first action is necessarily selected, `sel0` iff the second is.
/// First argument indexes rows.
struct SelectorTables {
  ConnectiveTable sel1;
  ConnectiveTable sel0;
};

SelectorTables build_selector_tables();

/// Cross-checks the two-action tables against the selection rule over
/// all 9 belief pairs: t cells coincide with selections, and both tables
/// are u exactly on the ambiguous diagonal.
struct SelectorConsistencyCell {
  Subjective a1;
  Subjective a0;
  std::string sel1_out;
  std::string sel0_out;
  SelectionOutcome rule;
  bool consistent = false;
};

struct SelectorConsistencyReport {
  std::vector<SelectorConsistencyCell> cells;
  bool consistent = true;
};

SelectorConsistencyReport selector_consistency_check(const SelectorTables& tables);

} // namespace mvlogic
