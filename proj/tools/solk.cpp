#include <iostream>
#include <string>
#include <vector>

#include "solk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return solk::cli::run(args, std::cout, std::cerr);
}
