#include <iostream>
#include <string>
#include <vector>

#include "orbcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orbcat::run(args, std::cout, std::cerr);
}
