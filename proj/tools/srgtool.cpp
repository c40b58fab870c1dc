#include <iostream>

#include "srgraph/cli.hpp"

int main(int argc, char** argv) {
    return srgraph::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
