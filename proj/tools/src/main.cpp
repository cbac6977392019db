#include <iostream>

#include "dcs/cli.hpp"

int main(int argc, char** argv) { return dcs::cli::run(argc, argv, std::cout, std::cerr); }
