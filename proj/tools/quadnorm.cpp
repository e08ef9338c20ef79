#include <iostream>

#include "quadnorm/cli.hpp"

int main(int argc, char** argv) { return quadnorm::cli::run(argc, argv, std::cout, std::cerr); }
