#include <iostream>
#include <string>
#include <vector>

#include "g2cal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g2cal::run_cli(args, std::cout, std::cerr);
}
