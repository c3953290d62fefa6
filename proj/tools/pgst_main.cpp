// Thin process wrapper around the in-process CLI entry point.
#include <iostream>
#include <string>
#include <vector>

#include "pgst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pgst::cli::run(args, std::cout, std::cerr);
}
