#include <iostream>
#include <string>
#include <vector>

#include "stone/dsl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stone::dsl::cli(args, std::cout, std::cerr);
}
