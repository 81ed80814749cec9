#include <iostream>

#include "padic/cli/app.hpp"

int main(int argc, char** argv) {
    return padic::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
