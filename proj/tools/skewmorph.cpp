#include <iostream>

#include "skewmorph/cli.hpp"

int main(int argc, char** argv) { return skewmorph::cli::main_entry(argc, argv, std::cout, std::cerr); }
