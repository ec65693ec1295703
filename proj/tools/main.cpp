#include <iostream>

#include "versal/cli.hpp"

int main(int argc, char** argv) {
  const versal::cli::Result result = versal::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
