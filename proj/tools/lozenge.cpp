#include <iostream>

#include "lozenge/cli.hpp"

int main(int argc, char** argv) { return lozenge::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
