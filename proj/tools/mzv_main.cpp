#include <iostream>

#include "mzv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mzv::run_cli(args, std::cout, std::cerr);
}
