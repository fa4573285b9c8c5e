#include <iostream>
#include <string>
#include <vector>

#include "pgroup/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pgroup::cli::run(args, std::cout, std::cerr);
}
