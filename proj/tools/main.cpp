#include <iostream>

#include "hwzeta/cli/app.hpp"

int main(int argc, char** argv) { return hwzeta::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
