#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dimerss {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNumerical = 2,
    kExitMismatch = 3,
};

/// Entry point behind the `dimerss` executable. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimerss
