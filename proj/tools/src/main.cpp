#include <iostream>

#include "wva/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wva::cli::run(args, std::cout, std::cerr);
}
