#pragma once

#include <string>
#include <vector>

namespace lieq_cli {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Executes one command line (without the program name). Never throws.
RunResult run(const std::vector<std::string>& args);

} // namespace lieq_cli
