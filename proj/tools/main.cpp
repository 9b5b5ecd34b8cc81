#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  xgratio::cli::Environment env;
  if (const char* seed = std::getenv("XGRATIO_SEED")) {
    env.seed = seed;
  }
  return xgratio::cli::run(args, std::cout, std::cerr, env);
}
