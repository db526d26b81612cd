#pragma once

#include <ostream>

namespace ilseq {

/// Exit codes: 0 success / all checks pass, 1 a verification mismatch,
/// 2 invalid input or unmet hypothesis.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// Entry point for the `ilseq` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ilseq
