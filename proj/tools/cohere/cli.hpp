#ifndef COHERE_TOOLS_CLI_HPP_
#define COHERE_TOOLS_CLI_HPP_

#include <iosfwd>

namespace cohere::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kExhausted = 3,
  kIo = 4,
  kInvariant = 5,
};

// Runs one `cohere` invocation. Human-readable output goes to out, diagnostics
// to err; reports go to the files named on the command line ("-" is stdout).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cohere::cli

#endif  // COHERE_TOOLS_CLI_HPP_
