#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilings {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,            // success, or the verified claim holds on range
  kExitFails = 1,         // the verified claim fails
  kExitUsage = 2,         // bad arguments or specs
  kExitResource = 3,      // state cap or time limit hit
  kExitInsufficient = 4,  // not enough terms to decide
};

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilings
