#include <iostream>

#include "srg/cli.hpp"

int main(int argc, char** argv) { return srg::cli::run(argc, argv, std::cout, std::cerr); }
