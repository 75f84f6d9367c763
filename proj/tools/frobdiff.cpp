#include <iostream>

#include "frobdiff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frobdiff::cli::run(args, std::cout, std::cerr);
}
