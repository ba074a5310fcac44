#include <demon/cli.hpp>

#include <iostream>

int main(int argc, char **argv) { return demon::cli::run(argc, argv, std::cout, std::cerr); }
