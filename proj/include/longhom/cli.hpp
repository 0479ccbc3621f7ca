#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace longhom {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitYes = 0,           // success, or a positive verdict
  kExitNo = 1,            // negative verdict (not adapted, not homotopic)
  kExitParse = 2,         // malformed arguments or documents
  kExitBound = 3,         // search bound or domain violated
  kExitInconsistent = 4,  // a map violates boundary consistency, or inputs disagree
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace longhom
