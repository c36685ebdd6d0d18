#include <iostream>

#include "obstruct/io/cli.hpp"

int main(int argc, char** argv) {
    return obstruct::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
