// The `adequate` command-line tool, callable in-process.

#ifndef ADEQUATE_TOOLS_CLI_HPP_
#define ADEQUATE_TOOLS_CLI_HPP_

#include <iosfwd>  // for istream, ostream
#include <string>  // for string
#include <vector>  // for vector

namespace adequate::cli {

  // Exit codes. `equal` additionally exits with 1 for NOT-EQUAL.
  inline constexpr int EXIT_OK            = 0;
  inline constexpr int EXIT_NOT_EQUAL     = 1;
  inline constexpr int EXIT_INPUT_ERROR   = 2;
  inline constexpr int EXIT_MODE_VIOLATION = 3;

  // `args` excludes the program name.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace adequate::cli

#endif  // ADEQUATE_TOOLS_CLI_HPP_
