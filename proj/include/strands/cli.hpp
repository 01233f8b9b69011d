// Command-line front end. run_command takes the argument vector (without the
// program name) and writes results to the given streams, so tests can drive
// it in-process. Exit codes: 0 success, 1 domain/input error, 2 usage error,
// 3 verification failure.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strands {

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace strands
