#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return congest::cli::main_with(argc, argv, std::cout, std::cerr);
}
