#include <iostream>

#include "refdyn/cli.hpp"

int main(int argc, char** argv) {
    return refdyn::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
