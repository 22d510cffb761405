#include <iostream>
#include <string>
#include <vector>

#include "rhc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rhc::dispatch(args, std::cout, std::cerr);
}
