#include <iostream>
#include <string>
#include <vector>

#include "psskit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return psskit::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
