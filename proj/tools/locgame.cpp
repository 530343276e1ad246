#include <iostream>
#include <vector>

#include "locgame/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return locgame::run_cli(args, std::cin, std::cout, std::cerr);
}
