#include <iostream>

#include "ucp/cli.hpp"

int main(int argc, char** argv) {
    return ucp::run_cli(argc, argv, std::cout, std::cerr);
}
