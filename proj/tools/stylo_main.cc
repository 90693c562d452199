#include <iostream>

#include "stylo/cli/commands.h"

int main(int argc, char** argv) {
  return stylo::cli::run(argc, argv, std::cout, std::cerr);
}
