#include <iostream>

#include "hochlab/cli.hpp"

int main(int argc, char** argv) { return hochlab::cli::main(argc, argv, std::cout, std::cerr); }
