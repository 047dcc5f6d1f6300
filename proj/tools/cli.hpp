#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace votelace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace votelace::cli
