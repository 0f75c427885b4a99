#include <iostream>
#include <string>
#include <vector>

#include "mvlogic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvlogic::run_cli(args, std::cout, std::cerr);
}
