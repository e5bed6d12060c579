#include <iostream>
#include <string>
#include <vector>

#include "torsionlab/cli.hpp"

int main(int argc, char** argv) {
  return torsionlab::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
