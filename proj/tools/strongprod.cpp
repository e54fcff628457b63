#include <iostream>

#include "strongprod/cli.hpp"

int main(int argc, char** argv) { return strongprod::cli::run(argc, argv, std::cout, std::cerr); }
