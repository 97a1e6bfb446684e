#include <iostream>
#include <string>
#include <vector>

#include "wittmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wittmod::cli::main(args, std::cout, std::cerr);
}
