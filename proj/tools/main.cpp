#include <iostream>

#include "resdil/cli.hpp"

int main(int argc, char** argv) { return resdil::run_cli(argc, argv, std::cout, std::cerr); }
