#include <iostream>

#include "hankel/cli.hpp"

int main(int argc, char** argv) { return hankel::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
