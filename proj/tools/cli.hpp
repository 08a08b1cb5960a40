#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aspnf::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // inconsistent, form violated, or not equivalent
  kUsage = 2,
  kInputError = 3,
};

/// Runs one command line (without the program name). `in` backs the `-`
/// file name and the answer-set readers.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace aspnf::cli
