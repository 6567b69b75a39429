#include <iostream>

#include "tcl_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcl::cli::run_command(args, std::cout, std::cerr);
}
