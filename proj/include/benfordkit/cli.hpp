// cli.hpp - command-line front end.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 data error.
// Conformity verdicts never change the exit code.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace benfordkit {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace benfordkit
