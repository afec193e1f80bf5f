#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zeno {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitOracle = 3;

/// Runs the command line (arguments without the program name). Data goes to
/// `out` when the output path is "-", diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeno
