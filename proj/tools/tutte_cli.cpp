#include <iostream>

#include "tutte/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tutte::cli::run(args, std::cout, std::cerr);
}
