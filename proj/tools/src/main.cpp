#include <iostream>
#include <string>
#include <vector>

#include "lambdamaps/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lambdamaps::cli::run(args, std::cout, std::cerr);
}
