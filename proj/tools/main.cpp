#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "plankton/cli.hpp"

int main(int argc, char** argv) {
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return plankton::cli::run(argc, argv, {std::cout, std::cerr, color});
}
