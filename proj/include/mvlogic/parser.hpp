#pragma once

#include <string>

#include "mvlogic/formula.hpp"
#include "mvlogic/logic_system.hpp"
#include "mvlogic/premise.hpp"

namespace mvlogic {

// Concrete syntax.
//
//   formula := atom
//            | conn '(' formula {',' formula} ')'
//            | '(' formula infix formula ')'
//            | prefix formula
//
// Unary connectives may be written prefix, binary ones infix with
// mandatory parentheses; there is no precedence table. ASCII names and
// the Unicode glyphs they alias are both accepted; the printer emits
// ASCII. Parse errors carry a byte offset into the input.

/// Parses and binds a formula against `system` (connective names and
/// arities are checked).
Formula parse_formula(const std::string& text, const LogicSystem& system);

/// Canonical form; parse_formula(print_formula(f)) is structurally f.
std::string print_formula(const Formula& formula);

/// Parses `v(I(<atom>), <val>) = <T|F>` or `v(V(<formula>), <val>) = <T|F>`,
/// validating <val> against the matching domain of `system`.
PremiseAssertion parse_premise(const std::string& text, const LogicSystem& system);

std::string print_premise(const PremiseAssertion& assertion);

/// Premise expression: an assertion, or `all(...)`/`any(...)` nesting.
PremiseExpr parse_premise_expr(const std::string& text, const LogicSystem& system);

std::string print_premise_expr(const PremiseExpr& expr);

} // namespace mvlogic
