#include <iostream>
#include <string>
#include <vector>

#include "starlit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return starlit::run_cli(args, std::cout, std::cerr);
}
