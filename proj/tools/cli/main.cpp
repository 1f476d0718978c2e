#include <iostream>
#include <string>
#include <vector>

#include "bhg/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bhg::cli::run(args, std::cout, std::cerr);
}
