#include <iostream>

#include "wentzell/cli.hpp"

int main(int argc, char** argv) {
    return wentzell::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
