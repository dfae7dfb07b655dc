#include <iostream>

#include "gammacheck/cli.hpp"

int main(int argc, char** argv) {
  return gammacheck::run_cli(argc, argv, std::cout, std::cerr);
}
