#include <iostream>
#include <string>
#include <vector>

#include "gprop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gprop::cli_main(args, std::cout, std::cerr);
}
