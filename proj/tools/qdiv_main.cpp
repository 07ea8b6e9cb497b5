#include <iostream>

#include "qdiv/cli/execute.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qdiv::cli::execute(args, std::cout, std::cerr);
}
