#include <iostream>
#include <string>
#include <vector>

#include "colourlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return colourlab::cli::run(args, std::cout, std::cerr);
}
