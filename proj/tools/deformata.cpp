#include <iostream>
#include <string>
#include <vector>

#include "deformata/frontend/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return deformata::frontend::run_cli(args, std::cin, std::cout, std::cerr);
}
