#include <iostream>

#include "amoeba/cli.hpp"

int main(int argc, char **argv) { return amoeba::cli::main(argc, argv, std::cout, std::cerr); }
