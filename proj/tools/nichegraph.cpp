#include <iostream>

#include "nichegraph/cli.hpp"

int main(int argc, char** argv) { return nichegraph::cli_main(argc, argv, std::cout, std::cerr); }
