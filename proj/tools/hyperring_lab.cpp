#include <iostream>

#include "hyperring/cli/app.hpp"

int main(int argc, char** argv) {
    return hyperring::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
