#include <unistd.h>

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return roughdxl::cli::run(argc, argv, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
}
