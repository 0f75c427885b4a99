#pragma once

#include <string>

#include "mvlogic/logic_system.hpp"

namespace mvlogic {

// LogicSystem definition file (JSON, UTF-8):
//
//   {
//     "name": ...,
//     "domains": [{"name": ..., "values": [...]}, ...],
//     "interp_domain": ...,
//     "valuation_domain": ...,
//     "correspondence": {"T": "t", ...} | null,
//     "connectives": [{"name": ..., "arity": k,
//                      "rows": [{"in": [...], "out": ...}, ...]}, ...]
//   }

LogicSystem system_from_json(const std::string& json_text);
LogicSystem load_system_file(const std::string& path);

/// Canonical serialization: rows in lexicographic input order, stable
/// key order, no volatile fields.
std::string system_to_json(const LogicSystem& system, int indent = 2);

} // namespace mvlogic
