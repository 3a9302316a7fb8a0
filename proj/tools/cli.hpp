// The swc command line, callable in-process.

#ifndef SWC_TOOLS_CLI_HPP_
#define SWC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace swc::cli {

  enum ExitCode : int {
    kSuccess            = 0,
    kVerificationFailed = 1,
    kBadInput           = 2,
  };

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace swc::cli

#endif  // SWC_TOOLS_CLI_HPP_
