// The operad command-line front end, callable in-process for tests.

#ifndef MONOPERAD_TOOLS_COMMANDS_HPP_
#define MONOPERAD_TOOLS_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace monoperad::cli {

  enum ExitCode : int { pass = 0, counterexample = 1, usage = 2 };

  //! \p args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace monoperad::cli

#endif  // MONOPERAD_TOOLS_COMMANDS_HPP_
