#include <iostream>
#include <string>
#include <vector>

#include "egcf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return egcf::cli::run(args, std::cout, std::cerr);
}
