#include <iostream>
#include <string>
#include <vector>

#include "syncx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return syncx::cli::run(args, std::cout, std::cerr);
}
