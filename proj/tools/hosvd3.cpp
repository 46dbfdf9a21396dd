#include <iostream>

#include "hosvd3/cli.hpp"

int main(int argc, char** argv) { return hosvd3::cli::run(argc, argv, std::cout, std::cerr); }
