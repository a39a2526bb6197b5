#include <iostream>

#include "fuzzymine/cli.hpp"

int main(int argc, char** argv) { return fuzzymine::cli::main(argc, argv, std::cout, std::cerr); }
