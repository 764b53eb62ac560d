#pragma once
// The command-line front end as a library function, so tests can drive it
// without spawning processes.

#include <functional>
#include <string>
#include <vector>

namespace motivic::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  invalid_input = 2,
  bound_exceeded = 3,
  internal_error = 4,
};

struct Result {
  int status = ok;
  std::string output;  // newline terminated
};

/// Runs one command. `args` excludes the program name. Documents named "-" or
/// omitted are read through `read_stdin`.
Result run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin);

}  // namespace motivic::cli
