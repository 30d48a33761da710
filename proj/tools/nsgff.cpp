#include <iostream>
#include <string>
#include <vector>

#include "nsgff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto out = nsgff::cli::run(args, std::cin);
  std::cout << out.text;
  return out.exit_code;
}
