#include <iostream>

#include "mudef/cli/commands.hpp"

int main(int argc, char** argv) { return mudef::cli::run(argc, argv, std::cout, std::cerr); }
