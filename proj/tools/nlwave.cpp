#include <iostream>
#include <string>
#include <vector>

#include "nlwave/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nlwave::harness::run_cli(args, std::cout, std::cerr);
}
