#include <iostream>
#include <string>
#include <vector>

#include "homogkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homogkit::runCommand(args, std::cout, std::cerr);
}
