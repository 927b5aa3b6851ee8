#include <iostream>
#include <string>
#include <vector>

#include "l1lab_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return l1lab::cli::run(args, std::cout, std::cerr);
}
