#include <iostream>
#include <string>
#include <vector>

#include "gjsp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gjsp::run_cli(args, std::cout, std::cerr);
}
