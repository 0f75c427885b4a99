#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvlogic/action_select.hpp"

namespace mvlogic {

/// Objective truth value of an action: whether, in the environment's
/// reality, the action contributes to the agent's objective.
enum class Objective { True, False, Unknown };

char to_char(Objective o);
Objective objective_from(char c);

/// One subjective and one objective value attached to an action.
struct DualBelief {
  Subjective s = Subjective::Unknown;
  Objective o = Objective::Unknown;

  bool operator==(const DualBelief& other) const { return s == other.s && o == other.o; }
  bool operator!=(const DualBelief& other) const { return !(*this == other); }

  /// Whether the subjective component mirrors the objective one.
  bool mirrored() const;
};

struct WorldState {
  int t = 0;
  std::map<std::string, DualBelief> beliefs;

  bool same_beliefs(const WorldState& other) const { return beliefs == other.beliefs; }
};

SelectionOutcome select_rational(const WorldState& state);

/// Per-action belief overrides an environment may produce for one step.
/// Subjective overrides are only meaningful under the lenient regime.
struct BeliefPatch {
  std::optional<Subjective> s;
  std::optional<Objective> o;
};

using EnvPatch = std::map<std::string, BeliefPatch>;

/// Deterministic environment: given the step being taken and the
/// selection outcome, produces belief overrides. Unpatched components
/// persist (the identity reading: consequences stay as they are).
class EnvironmentRule {
public:
  virtual ~EnvironmentRule() = default;
  virtual EnvPatch patch(int t, const WorldState& state,
                         const std::optional<std::string>& selected) const = 0;
};

/// Objectives (and, leniently, subjectives) persist unchanged.
class IdentityEnvironment final : public EnvironmentRule {
public:
  EnvPatch patch(int, const WorldState&, const std::optional<std::string>&) const override {
    return {};
  }
};

/// Scripted environment: a list of entries, each applying at a matching
/// step (and optionally only when a specific action was selected).
class ScheduledEnvironment final : public EnvironmentRule {
public:
  struct Entry {
    std::optional<int> at_t;
    std::optional<std::string> when_selected;
    EnvPatch set;
  };

  explicit ScheduledEnvironment(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  EnvPatch patch(int t, const WorldState& state,
                 const std::optional<std::string>& selected) const override;

  const std::vector<Entry>& entries() const { return entries_; }

private:
  std::vector<Entry> entries_;
};

// Consequence-realization regimes.
//
// Preservative: non-selected actions keep their subjective values and
// get fresh objectives from the environment; the selected action's old
// objective becomes its new subjective (transmission), with a fresh
// objective from the environment.
//
// Omniscient: subjective values always mirror objective ones; the
// environment only moves objectives.
//
// Lenient: the environment may rewrite any component of any action.
enum class Regime { Preservative, Omniscient, Lenient };

const char* to_string(Regime regime);

WorldState step_preservative(const WorldState& state, const EnvironmentRule& env);
WorldState step_omniscient(const WorldState& state, const EnvironmentRule& env);
WorldState step_lenient(const WorldState& state, const EnvironmentRule& env);

WorldState step(const WorldState& state, const EnvironmentRule& env, Regime regime);

/// One-step fixed point: a selection exists and re-applying the regime's
/// step leaves every belief unchanged. Under a deterministic environment
/// this extends to all later steps by induction.
bool is_equilibrium(const WorldState& state, const EnvironmentRule& env, Regime regime);

enum class Terminal { Equilibrium, NoSelection, StepLimit };

const char* to_string(Terminal terminal);

struct TraceStep {
  WorldState state;
  SelectionOutcome selection;
};

struct Trace {
  Regime regime = Regime::Preservative;
  std::vector<TraceStep> steps;
  Terminal terminal = Terminal::StepLimit;
  std::optional<NoSelectionCase> no_selection_reason;
};

struct Scenario {
  std::string name;
  ActionSet actions{{"A0", "A1"}};
  Regime regime = Regime::Preservative;
  std::map<std::string, DualBelief> initial;
  std::optional<std::map<std::string, DualBelief>> initial_alt;
  std::shared_ptr<const EnvironmentRule> env = std::make_shared<IdentityEnvironment>();
  int step_limit = 64;
  bool use_alt_initial = false;
};

/// Checks totality of beliefs over the action set and the step limit.
void validate_scenario(const Scenario& scenario);

/// Select + step under the scenario's regime until equilibrium,
/// no-selection, or the step limit. Strictly sequential; the returned
/// trace is immutable.
Trace run(const Scenario& scenario);

} // namespace mvlogic
