#include <iostream>
#include <string>
#include <vector>

#include "sparse_ssa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sparse_ssa::run_cli(args, std::cout, std::cerr);
}
