#include <iostream>
#include <string>
#include <vector>

#include "cantor/cli.hpp"

int main(int argc, char** argv) {
  return cantor::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
