#include <iostream>
#include <string>
#include <vector>

#include "fracvar/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fracvar::run_cli(args, std::cerr);
}
