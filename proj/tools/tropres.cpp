#include <iostream>
#include <string>
#include <vector>

#include "tropres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tropres::run(args, std::cout, std::cerr);
}
