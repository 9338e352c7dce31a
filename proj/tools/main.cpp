#include <iostream>
#include <string>
#include <vector>

#include "zastava/cli_driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zastava::run_cli(args, std::cin, std::cout, std::cerr);
}
