#include <iostream>
#include <string>
#include <vector>

#include "cyclo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cyclo::cli::run(args, std::cout, std::cerr);
}
