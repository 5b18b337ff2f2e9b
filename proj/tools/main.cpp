#include <iostream>

#include "grc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grc::run(args, std::cout, std::cerr);
}
