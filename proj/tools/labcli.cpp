#include <iostream>
#include <string>
#include <vector>

#include "rgglab/sweep.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rgglab::labcli::cli_dispatch(args, std::cout, std::cerr);
}
