#include <iostream>

#include "charvar/cli/commands.hpp"

int main(int argc, char** argv) { return charvar::cli::run_cli(argc, argv, std::cout, std::cerr); }
