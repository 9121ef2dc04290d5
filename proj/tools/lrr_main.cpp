#include "lrr/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return lrr::cli::run(argc, argv, std::cout, std::cerr);
}
