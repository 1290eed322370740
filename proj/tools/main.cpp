#include <iostream>
#include <string>
#include <vector>

#include "graphoid/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return graphoid::run_command(args, std::cout, std::cerr);
}
