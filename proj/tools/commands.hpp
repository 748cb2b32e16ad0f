#pragma once

#include <string>
#include <vector>

namespace entropic::cli {

struct Output
{
    int exit_code = 0;
    std::string out;
    std::string err;
};

// args excludes the program name.
Output run(const std::vector<std::string>& args);

} // namespace entropic::cli
