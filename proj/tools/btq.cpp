#include <iostream>
#include <string>
#include <vector>

#include "btq/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return btq::commands::run_cli(args, std::cout, std::cerr);
}
