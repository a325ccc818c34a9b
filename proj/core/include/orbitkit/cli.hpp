#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitkit::cli {

/// Full command-line entry point; returns the process exit code.
/// 0 = all verdicts hold, 1 = some verdict fails, 2 = input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace orbitkit::cli
