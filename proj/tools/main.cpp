#include <iostream>
#include <string>
#include <vector>

#include "qo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qo::run_cli(args, std::cout, std::cerr);
}
