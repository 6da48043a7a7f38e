#include <iostream>

#include "cardalg/cli.hpp"

int main(int argc, char** argv) {
  return cardalg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
