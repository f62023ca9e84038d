#include <iostream>
#include <string>
#include <vector>

#include "hyperfact/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperfact::cli::run(args, std::cout, std::cerr);
}
