#include <iostream>
#include <string>
#include <vector>

#include "rigcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rigcat::runCli(args, std::cout, std::cerr);
}
