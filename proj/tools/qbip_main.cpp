#include <iostream>

#include "qbip/cli.hpp"

int main(int argc, char** argv) {
    return qbip::cli::run(argc, argv, std::cout, std::cerr);
}
