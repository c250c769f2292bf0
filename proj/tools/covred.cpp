#include <iostream>

#include "covred/cli.hpp"

int main(int argc, char** argv) { return covred::cli::run_command(argc, argv, std::cout, std::cerr); }
