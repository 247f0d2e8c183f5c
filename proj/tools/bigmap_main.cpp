#include <iostream>

#include "bigmap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bigmap::cli::run(args, std::cout, std::cerr);
}
