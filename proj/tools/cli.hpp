#ifndef FIM_TOOLS_CLI_HPP_
#define FIM_TOOLS_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace fim::cli {

  enum ExitCode : int {
    success      = 0,  // success, or "equal"
    failure      = 1,  // a verification failed, or "distinct" with --exit-status
    usage_error  = 2,  // bad flags, unparsable input, I/O errors
  };

  //! Runs fimtool with `args` (excluding the program name).
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

  //! Names accepted by `verify --only`, in execution order.
  std::vector<std::string> const& check_names();

}  // namespace fim::cli

#endif  // FIM_TOOLS_CLI_HPP_
