#include <iostream>

#include "rpluq_cli/cli.hpp"

int main(int argc, char** argv) {
  return rpluq::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
