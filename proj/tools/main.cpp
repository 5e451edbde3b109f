#include <iostream>

#include "iet3/cli.hpp"

int main(int argc, char** argv) { return iet3::cli::main_entry(argc, argv, std::cout, std::cerr); }
