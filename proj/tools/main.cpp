#include <iostream>
#include <string>
#include <vector>

#include "seclab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seclab::run_cli(args, std::cout, std::cerr);
}
