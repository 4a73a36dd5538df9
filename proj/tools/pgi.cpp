#include <iostream>
#include <string>
#include <vector>

#include "pgi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pgi::run_cli(args, std::cout, std::cerr);
}
