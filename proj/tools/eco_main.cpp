#include <iostream>

#include "eco/cli.hpp"

int main(int argc, char** argv) {
  return eco::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
