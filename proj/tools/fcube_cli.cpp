#include <iostream>

#include "fcube/cli.hpp"

int main(int argc, char** argv) { return fcube::cli::run(argc, argv, std::cout, std::cerr); }
