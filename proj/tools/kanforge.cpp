#include <iostream>

#include "kanforge/cli.hpp"

int main(int argc, char** argv) { return kanforge::cli::run(argc, argv, std::cout, std::cerr); }
