#include <iostream>
#include <vector>

#include "pairfree/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pairfree::cli::RunResult r = pairfree::cli::run_command(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
