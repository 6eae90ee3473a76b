#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return liemax::cli::run(argc, argv, std::cout, std::cerr); }
