#include <iostream>
#include <string>
#include <vector>

#include "bunpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bunpoly::cli::run(std::move(args), std::cout, std::cerr);
}
