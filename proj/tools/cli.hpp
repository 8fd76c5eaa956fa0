#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yh::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kParameterError = 3,
};

// Runs `yhcalc <args...>`; args excludes the program name. Words are read
// from the positional argument, from --file, or line by line from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace yh::cli
