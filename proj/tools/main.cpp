#include <iostream>

#include "graphtherm/cli.hpp"

int main(int argc, char** argv) {
  return graphtherm::run_cli(argc, argv, std::cout, std::cerr);
}
