#include <iostream>

#include "eulcat/cli.hpp"

int main(int argc, char** argv) {
  return eulcat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
