#include "polyzeta/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polyzeta::run_cli(argc, argv, std::cout, std::cerr); }
