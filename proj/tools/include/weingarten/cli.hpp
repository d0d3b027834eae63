#pragma once

#include "weingarten/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace weingarten::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoSolution = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitNonConvergence = 4;
inline constexpr int kExitBadInput = 5;

/// Exit status for a library error: 2 for the hyperbolic case, 3 for
/// breakdowns of an elliptic solve, 4 for NonConvergence, 5 for everything else.
[[nodiscard]] int exit_code_for(ErrorCode code) noexcept;

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weingarten::cli
