#include <iostream>

#include "fastph/cli.hpp"

int main(int argc, char** argv) { return fastph::cli::main_entry(argc, argv, std::cout, std::cerr); }
