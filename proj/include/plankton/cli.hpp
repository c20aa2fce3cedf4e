#pragma once

#include <ostream>

namespace plankton::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kIoError = 3,
};

struct Console {
  std::ostream& out;
  std::ostream& err;
  bool color = false;  // ANSI colour on pass/fail lines
};

// Entry point shared by the executable and the tests. argv[0] is the
// program name.
int run(int argc, const char* const* argv, Console console);

}  // namespace plankton::cli
