#pragma once

#include <stdexcept>
#include <string>

namespace entropic {

// Internal numerical failure (non-convergence, budget exhausted). Invalid
// caller input is reported with std::invalid_argument instead.
class numeric_failure : public std::runtime_error
{
public:
    explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace entropic
