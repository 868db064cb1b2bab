#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3fib::cli {

// Entry point of the command-line tool, separated from main() so tests can
// drive it.  `args` excludes the program name.  Exit codes: 0 success,
// 1 verification failure, 2 usage or parse error, 3 unsupported
// characteristic, 4 degenerate model.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace k3fib::cli
