#include <iostream>
#include <string>
#include <vector>

#include "evchar/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return evchar::dispatch(args, std::cout, std::cerr);
}
