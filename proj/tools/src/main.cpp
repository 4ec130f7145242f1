#include <iostream>

#include "bispec_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bispec::cli::run(args, std::cout, std::cerr);
}
