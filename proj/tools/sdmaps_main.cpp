#include <iostream>
#include <string>
#include <vector>

#include "sdmaps/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sdmaps::run_cli(args, std::cout, std::cerr);
}
