#include <iostream>
#include <string>
#include <vector>

#include "bht_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bht::cli::run(std::move(args), std::cout, std::cerr);
}
