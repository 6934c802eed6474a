#include <iostream>

#include "ldp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ldp::run_cli(args, std::cout, std::cerr);
}
