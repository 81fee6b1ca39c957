#include <iostream>

#include "lamfam/cli.hpp"

int main(int argc, char** argv) { return lamfam::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
