#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdiv::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (without the program name). The JSON report goes to
/// `out` or to the --out file; diagnostics go to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdiv::cli
