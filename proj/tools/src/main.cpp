#include "schubert/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  std::ios::sync_with_stdio(false);
  return schubert::cli::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
