#include <iostream>
#include <string>
#include <vector>

#include "veccomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return veccomp::cli::run(args, std::cout, std::cerr,
                           veccomp::cli::config_from_env());
}
