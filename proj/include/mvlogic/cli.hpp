#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvlogic {

// Exit codes: 0 success/equilibrium, 1 corpus failure, 2 input error,
// 3 no-selection, 4 step-limit.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCorpusFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNoSelection = 3;
inline constexpr int kExitStepLimit = 4;

/// Full command dispatch, in-process (argv without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mvlogic
