#include <iostream>
#include <string>
#include <vector>

#include "tilings/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tilings::run_cli(args, std::cout, std::cerr);
}
