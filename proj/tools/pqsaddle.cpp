#include <iostream>

#include "pqsaddle/commands.hpp"

int main(int argc, char** argv) { return pqs::run_cli(argc, argv, std::cout, std::cerr); }
