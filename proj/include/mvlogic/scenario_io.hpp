#pragma once

#include <string>
#include <variant>

#include "mvlogic/dynamics.hpp"
#include "mvlogic/es_theory.hpp"

namespace mvlogic {

// Scenario file (JSON, UTF-8):
//
//   {
//     "name": ...,
//     "actions": [...],
//     "theory": "rational" | "es",          (default "rational")
//     "regime": "preservative" | "omniscient" | "lenient",
//     "initial": {action: {"s": ..., "o": ...}, ...},
//     "initial_alt": {...},                  (optional alternate beliefs)
//     "env": [{"at_t": k, "when_selected": ..., "set": {action: {"s"?, "o"?}}}, ...],
//     "step_limit": n                        (default 64)
//   }
//
// Under "es", s/o are numbers in [0,1] and "regime" is omitted.

using AnyScenario = std::variant<Scenario, EsScenario>;

AnyScenario scenario_from_json(const std::string& json_text);
AnyScenario load_scenario_file(const std::string& path);

std::string trace_to_json(const Trace& trace, const Scenario& scenario, int indent = 2);
std::string trace_to_json(const EsTrace& trace, const EsScenario& scenario, int indent = 2);

/// Line-oriented rendering, one state per line plus the terminal line.
std::string render_trace(const Trace& trace, const Scenario& scenario);
std::string render_trace(const EsTrace& trace, const EsScenario& scenario);

} // namespace mvlogic
