#include <iostream>
#include <string>
#include <vector>

#include "brokenstick/cli/app.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return brokenstick::cli::run(args, std::cout, std::cerr);
}
