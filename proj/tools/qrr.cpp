#include <iostream>
#include <string>
#include <vector>

#include "qrr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qrr::run_cli(args, std::cout, std::cerr);
}
