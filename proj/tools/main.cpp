#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return cubering::cli::run(argc, argv, std::cout, std::cerr); }
