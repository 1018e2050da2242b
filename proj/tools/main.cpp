#include <iostream>
#include <string>
#include <vector>

#include "schurlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return schurlab::run(args, std::cout, std::cerr);
}
