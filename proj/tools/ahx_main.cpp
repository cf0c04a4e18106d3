#include <iostream>
#include <string>
#include <vector>

#include "ahx/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ahx::run_cli(args, std::cin, std::cout, std::cerr);
}
