#pragma once

#include <ostream>

namespace cubering::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kPreconditionFailed = 2,
  kVerificationFailed = 3,
};

/// Entry point of the command-line tool, writing to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubering::cli
