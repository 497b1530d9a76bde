#include <iostream>

#include "hearts/cli/commands.hpp"

int main(int argc, char** argv) { return hearts::cli::run_cli(argc, argv, std::cout, std::cerr); }
