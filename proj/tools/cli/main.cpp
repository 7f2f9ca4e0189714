#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  return birat::cli::main_entry(argc, argv, std::cout, std::cerr);
}
