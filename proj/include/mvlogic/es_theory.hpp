#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvlogic/action_select.hpp"
#include "mvlogic/dynamics.hpp"

namespace mvlogic {

/// Empirical-skepticism beliefs: subjective and objective components are
/// reals in [0,1] rather than discrete truth values.
struct ProbBelief {
  double s = 0.0;
  double o = 0.0;

  bool operator==(const ProbBelief& other) const { return s == other.s && o == other.o; }
  bool operator!=(const ProbBelief& other) const { return !(*this == other); }
};

struct EsState {
  int t = 0;
  std::map<std::string, ProbBelief> beliefs;

  bool same_beliefs(const EsState& other) const { return beliefs == other.beliefs; }
};

struct EsSelection {
  std::optional<std::string> selected;

  bool is_selected() const { return selected.has_value(); }
};

/// The unique action whose subjective value strictly exceeds all others;
/// a shared maximum is a tie (no selection). Comparisons are exact — no
/// epsilon, so authored ties stay ties.
EsSelection select_es(const std::map<std::string, ProbBelief>& beliefs);

struct ProbPatch {
  std::optional<double> s;
  std::optional<double> o;
};

using EsEnvPatch = std::map<std::string, ProbPatch>;

class EsEnvironmentRule {
public:
  virtual ~EsEnvironmentRule() = default;
  virtual EsEnvPatch patch(int t, const EsState& state,
                           const std::optional<std::string>& selected) const = 0;
};

class EsIdentityEnvironment final : public EsEnvironmentRule {
public:
  EsEnvPatch patch(int, const EsState&, const std::optional<std::string>&) const override {
    return {};
  }
};

class EsScheduledEnvironment final : public EsEnvironmentRule {
public:
  struct Entry {
    std::optional<int> at_t;
    std::optional<std::string> when_selected;
    EsEnvPatch set;
  };

  explicit EsScheduledEnvironment(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  EsEnvPatch patch(int t, const EsState& state,
                   const std::optional<std::string>& selected) const override;

  const std::vector<Entry>& entries() const { return entries_; }

private:
  std::vector<Entry> entries_;
};

/// Belief-preserving update over continuous values: non-selected actions
/// keep their subjective component and take objectives from the
/// environment; the selected action's old objective becomes its new
/// subjective. Requires a selection.
EsState step_es(const EsState& state, const EsEnvironmentRule& env);

bool is_es_equilibrium(const EsState& state, const EsEnvironmentRule& env);

struct EsTraceStep {
  EsState state;
  EsSelection selection;
};

struct EsTrace {
  std::vector<EsTraceStep> steps;
  Terminal terminal = Terminal::StepLimit;
};

struct EsScenario {
  std::string name;
  ActionSet actions{{"A0", "A1"}};
  std::map<std::string, ProbBelief> initial;
  std::optional<std::map<std::string, ProbBelief>> initial_alt;
  std::shared_ptr<const EsEnvironmentRule> env = std::make_shared<EsIdentityEnvironment>();
  int step_limit = 64;
  bool use_alt_initial = false;
};

void validate_es_scenario(const EsScenario& scenario);

EsTrace run_es(const EsScenario& scenario);

} // namespace mvlogic
