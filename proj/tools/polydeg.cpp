#include <iostream>

#include "polydeg/cli.hpp"

int main(int argc, char** argv) { return polydeg::cli::main_entry(argc, argv, std::cout, std::cerr); }
