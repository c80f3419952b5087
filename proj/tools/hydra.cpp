#include "hydra/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hydra::cli_main(argc, argv, std::cout, std::cerr); }
