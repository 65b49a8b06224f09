#include <iostream>

#include "solenoid/cli/app.hpp"

int main(int argc, char** argv) { return solenoid::cli::run_cli(argc, argv, std::cout, std::cerr); }
