#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddc::cli {

enum ExitCode : int {
    kOk = 0,
    kVerdictFalse = 1,
    kUsage = 2,
    kResourceCap = 3,
};

/// Full command dispatch; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddc::cli
