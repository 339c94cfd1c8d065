#include <iostream>
#include <string>
#include <vector>

#include "raagdyn/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return raagdyn::run_command(args, std::cout, std::cerr);
}
