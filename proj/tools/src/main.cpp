#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return s7lab::cli::run(argc, argv, std::cout, std::cerr); }
