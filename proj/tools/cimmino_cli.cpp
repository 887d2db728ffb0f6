#include <iostream>

#include "cimmino/cli.hpp"

int main(int argc, char** argv) {
  return cimmino::cli::run(argc, argv, std::cout, std::cerr);
}
