#include <iostream>
#include <string>
#include <vector>

#include "agr/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return agr::run_cli(args, std::cout, std::cerr);
}
