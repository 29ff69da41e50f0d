#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mixprior::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

// Runs one command line (arguments after the program name). Results go to
// `out` unless --out names a file; diagnostics go to `err`. Returns the exit
// code: 0 success, 2 usage error, 3 numeric or truncation failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixprior::cli
