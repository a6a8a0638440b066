#include <iostream>

#include "psearch/cli.hpp"

int main(int argc, char** argv) { return psearch::cli::run(argc, argv, std::cout, std::cerr); }
