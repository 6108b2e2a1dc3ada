#include <iostream>
#include <string>
#include <vector>

#include "spherevol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spherevol::run_cli(args, std::cout, std::cerr);
}
