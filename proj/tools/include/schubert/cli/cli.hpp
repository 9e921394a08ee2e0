#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schubert::cli
