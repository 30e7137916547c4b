#include <iostream>

#include "critcross/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return critcross::run_cli(std::move(args), std::cout, std::cerr);
}
