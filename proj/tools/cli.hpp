#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jarnik::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name. Artifacts named "-"
/// go to `out`; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jarnik::cli
