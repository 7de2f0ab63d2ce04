#include <iostream>
#include <vector>

#include "liec/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return liec::cli::run(args, std::cout, std::cerr);
}
