#include <iostream>
#include <string>
#include <vector>

#include "srsphere/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srsphere::run_cli(args, std::cout, std::cerr);
}
