#include <iostream>
#include <string>
#include <vector>

#include "qlcd/cli.hpp"

int main(int argc, char** argv) {
  qlcd::install_interrupt_handler();
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qlcd::run_cli(args, std::cout, std::cerr);
}
