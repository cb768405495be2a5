#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kmq {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitInvalid = 2,
  kExitDepth = 3,
  kExitResource = 4,
  kExitInconsistent = 5,
};

// Runs the command line `args` (without the program name).  Reports go to
// `out` or to the --out file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmq
