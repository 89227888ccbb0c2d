#include <iostream>
#include <string>
#include <vector>

#include "spoofscan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spoofscan::run_cli(args, std::cout, std::cerr);
}
