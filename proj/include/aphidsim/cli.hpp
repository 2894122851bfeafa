#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aphidsim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitError = 2;

// Entry point for the command-line tool; `args` excludes the program name.
//
//   run <scenario-file> [--out <dir>]
//   figures [--which <id>[,<id>...]] [--out <dir>]
//   sweep <sweep-file> [--out <dir>]
//   validate <scenario-file>
//
// Returns 0 on success, 1 when input fails validation (including malformed
// files and figure verdict mismatches), 2 on I/O, numerical or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aphidsim
