#include <iostream>

#include "gorelab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gorelab::run_cli(args, std::cout, std::cerr);
}
