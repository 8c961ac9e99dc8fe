#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bytedup::bench {

struct ProcessResult {
  int exit_code = -1;  // 128 + signal number when killed by a signal
  std::string out;
  std::string err;
};

// Spawns argv[0] (a path, not searched in PATH), feeds `stdin_bytes` to its
// standard input, and collects standard output and error until it exits.
// Throws HarnessError when the process cannot be started.
//
// SIGPIPE is ignored process-wide on first use so a child that exits early
// cannot kill the caller.
ProcessResult run_process(const std::vector<std::string>& argv, std::string_view stdin_bytes);

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bytedup::bench
