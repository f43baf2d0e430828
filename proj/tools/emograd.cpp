#include <iostream>

#include "emograd/cli.hpp"

int main(int argc, char** argv) { return emograd::cli::run(argc, argv, std::cout, std::cerr); }
