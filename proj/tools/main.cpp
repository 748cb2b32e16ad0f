#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    const entropic::cli::Output o = entropic::cli::run({argv + 1, argv + argc});
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}
