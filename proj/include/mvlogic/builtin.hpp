#pragma once

#include "mvlogic/logic_system.hpp"

namespace mvlogic::builtin {

// Built-in systems, constructed in code. The same definitions ship as
// JSON files under data/; tests pin the two sources against each other.

/// The six-valued system: atoms take {T,F,U}, complex sentences {t,f,u},
/// with the identity-letter correspondence and connectives not/and/or/
/// then plus the two-action selectors sel1/sel0.
LogicSystem svl();

/// A two-valued system whose single binary connective gives every input
/// pair a distinct output, so each valuation pins down both inputs
/// exactly: interpretations over {M,F}, outputs {A,B,C,D}.
LogicSystem paircode();

} // namespace mvlogic::builtin
