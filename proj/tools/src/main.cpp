#include <iostream>

#include "udyn_cli/cli.hpp"

int main(int argc, char** argv) { return udyn::cli::main_entry(argc, argv, std::cout, std::cerr); }
