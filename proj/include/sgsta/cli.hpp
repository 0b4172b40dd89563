#pragma once

#include <iosfwd>
#include <string>

namespace sgsta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitDivergence = 2;

// Entry point of the `sgsta` tool. Data goes to --out (stdout by default),
// every message to `diag`.
int run(int argc, const char* const* argv, std::ostream& diag);

}  // namespace sgsta::cli
