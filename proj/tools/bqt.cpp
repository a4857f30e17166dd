#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return bqt::cli::run(argc, argv, std::cout, std::cerr); }
