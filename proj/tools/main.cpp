#include "szeged/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return szeged::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
