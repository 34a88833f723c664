#include <iostream>

#include "motif/cli.hpp"

int main(int argc, char** argv) { return motif::run_cli(argc, argv, std::cout, std::cerr); }
