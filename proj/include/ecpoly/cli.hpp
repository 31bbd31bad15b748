#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecpoly::cli {

/// Exit codes of the command line front end.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,     // bad arguments, unparsable graph or parameters
  kDisagreement = 2,   // verify ran and at least one claim disagreed
  kResourceLimit = 3,  // edge cap, recursion guard or integer range exceeded
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecpoly::cli
