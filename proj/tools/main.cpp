#include <iostream>
#include <string>
#include <vector>

#include "dragonbound/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dragonbound::cli_main(args, std::cout, std::cerr);
}
