#include "ergm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ergm::cli::main_entry(argc, argv, std::cout, std::cerr); }
