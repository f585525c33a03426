#include <iostream>
#include <vector>

#include "mccg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mccg::runCli(args, std::cout, std::cerr);
}
