#include "hyperzeta/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return hyperzeta::cli::run(argc, argv, std::cout, std::cerr); }
