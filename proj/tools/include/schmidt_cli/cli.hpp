#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schmidt::cli {

enum ExitCode : int {
  kPass = 0,
  kFail = 1,       // a counterexample or failed identity
  kUsage = 2,      // bad arguments, unwritable output
  kInternal = 3,   // an internal cross-check disagreed
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schmidt::cli
