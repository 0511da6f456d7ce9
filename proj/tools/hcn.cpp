#include <iostream>
#include <string>
#include <vector>

#include "hcn/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hcn::cli_main(args, std::cout, std::cerr);
}
