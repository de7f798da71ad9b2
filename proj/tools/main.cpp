#include <iostream>

#include "corrcast/cli.hpp"

int main(int argc, char** argv) { return corrcast::cli::run(argc, argv, std::cout, std::cerr); }
