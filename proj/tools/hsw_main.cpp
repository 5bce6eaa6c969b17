#include <iostream>

#include "hsw/cli.hpp"

int main(int argc, char** argv) {
  return hsw::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
