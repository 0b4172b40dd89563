#include <iostream>

#include "sgsta/cli.hpp"

int main(int argc, char** argv) { return sgsta::cli::run(argc, argv, std::cerr); }
