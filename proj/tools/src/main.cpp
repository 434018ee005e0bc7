#include <iostream>

#include "eqrim_cli/cli.hpp"

int main(int argc, char** argv) { return eqrim::cli::run(argc, argv, std::cout, std::cerr); }
