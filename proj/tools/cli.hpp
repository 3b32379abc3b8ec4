#pragma once

#include <ostream>

namespace screw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitNoSelection = 2;
inline constexpr int kExitFailure = 3;

// Entry point shared by the executable and the tests. Output files named by
// --out are written directly; otherwise results go to out.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace screw::cli
