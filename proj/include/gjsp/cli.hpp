#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gjsp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one gjsp command line (without the program name). Diagnostics go to
// err as a single line; results go to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gjsp
