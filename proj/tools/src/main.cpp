#include <iostream>

#include "hornlab_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return hornlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
