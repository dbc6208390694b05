#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polylab::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kExhausted = 3,
  kSizeCap = 4,
};

// Runs one command line (args excludes the program name). Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polylab::cli
